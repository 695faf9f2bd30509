#include "spinfw/classical/hamiltonian.hpp"

#include <cmath>

namespace spinfw::classical
{

namespace
{

// Scalar coefficient functions of g = gamma_pi and their g-derivatives.
struct Coefficients
{
    double g;
    double a, da;  // (gm - e/mc + (e/mc)/g) B
    double h, dh;  // 1/(g(g+1)), times kappa = (gm - e/mc)/(m^2 c^2)
    double w, dw;  // gm/g - (e/mc)/(g+1), multiplies (pi x E)/(mc)
    double kappa;
    double mc;
};

Coefficients coefficients(ThreeVector const& pi, ParticleParams const& params)
{
    Coefficients k{};
    double const emc = params.dirac_gyromagnetic();
    double const gm = params.gamma_m();
    k.mc = params.m() * params.c();
    k.g = gamma_pi(pi, params);
    double const g = k.g;
    k.a = gm - emc + emc / g;
    k.da = -emc / (g * g);
    k.h = 1 / (g * (g + 1));
    k.dh = -(2 * g + 1) / (g * g * (g + 1) * (g + 1));
    k.w = gm / g - emc / (g + 1);
    k.dw = -gm / (g * g) + emc / ((g + 1) * (g + 1));
    k.kappa = (gm - emc) / (k.mc * k.mc);
    return k;
}

ThreeVector precession(Coefficients const& k, ThreeVector const& pi,
                       ThreeVector const& e, ThreeVector const& b)
{
    return k.a * b - k.kappa * k.h * pi.dot(b) * pi - k.w / k.mc * pi.cross(e);
}

Matrix3 jacobian(Coefficients const& k, ThreeVector const& pi,
                 ThreeVector const& e, ThreeVector const& b)
{
    // dg/dpi_j = pi_j / (m^2 c^2 g)
    ThreeVector const dg = pi / (k.mc * k.mc * k.g);
    ThreeVector const pxe = pi.cross(e);
    double const pb = pi.dot(b);
    Matrix3 j = k.da * b * dg.transpose();
    j -= k.kappa
         * (k.dh * pb * pi * dg.transpose()
            + k.h * (pi * b.transpose() + pb * Matrix3::Identity()));
    Matrix3 cross_e;
    cross_e << 0, e.z(), -e.y(), -e.z(), 0, e.x(), e.y(), -e.x(), 0;
    j -= (k.dw * pxe * dg.transpose() + k.w * cross_e) / k.mc;
    return j;
}

}  // namespace

ThreeVector precession_vector(ThreeVector const& pi, ThreeVector const& e,
                              ThreeVector const& b,
                              ParticleParams const& params)
{
    return precession(coefficients(pi, params), pi, e, b);
}

Matrix3 precession_jacobian(ThreeVector const& pi, ThreeVector const& e,
                            ThreeVector const& b, ParticleParams const& params)
{
    return jacobian(coefficients(pi, params), pi, e, b);
}

ThreeVector precession_vector_low_speed(ThreeVector const& beta,
                                        ThreeVector const& e,
                                        ThreeVector const& b,
                                        ParticleParams const& params)
{
    double const gm = params.gamma_m();
    double const emc = params.dirac_gyromagnetic();
    return gm * b - 0.5 * (gm - emc) * beta.dot(b) * beta
           - (gm - 0.5 * emc) * beta.cross(e);
}

double h_orbit(PhaseState const& state, FieldModel const& model,
               ParticleParams const& params)
{
    FieldSample const f = sample_field(model, state.x);
    ThreeVector const pi = kinematic_momentum(state.p, f.a, params);
    double const c = params.c();
    double const mc2 = params.m() * c * c;
    return std::sqrt(c * c * pi.squaredNorm() + mc2 * mc2) + params.e() * f.phi;
}

double h_spin(PhaseState const& state, FieldModel const& model,
              ParticleParams const& params)
{
    FieldSample const f = sample_field(model, state.x);
    ThreeVector const pi = kinematic_momentum(state.p, f.a, params);
    return -state.s.dot(precession_vector(pi, f.e, f.b, params));
}

double h_total(PhaseState const& state, FieldModel const& model,
               ParticleParams const& params)
{
    return h_orbit(state, model, params) + h_spin(state, model, params);
}

namespace
{

struct Evaluation
{
    FieldSample field;
    ThreeVector pi;
    Coefficients k;
    ThreeVector f_pi;
    ThreeVector v_pi;
    ThreeVector dh_dpi;
    ThreeVector dh_dx;
};

Evaluation evaluate(PhaseState const& state, FieldModel const& model,
                    ParticleParams const& params,
                    VelocityPrescription prescription)
{
    Evaluation ev;
    ev.field = sample_field(model, state.x);
    FieldSample const& f = ev.field;
    ev.pi = kinematic_momentum(state.p, f.a, params);
    ev.k = coefficients(ev.pi, params);
    Coefficients const& k = ev.k;
    ev.f_pi = precession(k, ev.pi, f.e, f.b);
    ev.v_pi = ev.pi / (k.g * params.m());

    if (prescription == VelocityPrescription::Hamiltonian)
    {
        Matrix3 const j = jacobian(k, ev.pi, f.e, f.b);
        ev.dh_dpi = ev.v_pi - j.transpose() * state.s;
    }
    else
    {
        ev.dh_dpi = ev.v_pi;
    }

    // dH/dx_j = e d_j phi - s . d_j F|_fields - (e/c) sum_k dH/dpi_k d_j A_k
    double const e_over_c = params.e() / params.c();
    ThreeVector const& s = state.s;
    double const s_pi = s.dot(ev.pi);
    for (int j = 0; j < 3; ++j)
    {
        ThreeVector const db = f.grad_b.col(j);
        ThreeVector const de = f.grad_e.col(j);
        double const s_df = k.a * s.dot(db)
                            - k.kappa * k.h * ev.pi.dot(db) * s_pi
                            - k.w / k.mc * s.dot(ev.pi.cross(de));
        ev.dh_dx[j] = params.e() * f.grad_phi[j] - s_df
                      - e_over_c * ev.dh_dpi.dot(f.jac_a.col(j));
    }
    return ev;
}

}  // namespace

HamiltonGradient grad_h(PhaseState const& state, FieldModel const& model,
                        ParticleParams const& params)
{
    Evaluation const ev
        = evaluate(state, model, params, VelocityPrescription::Hamiltonian);
    return {ev.dh_dx, ev.dh_dpi};
}

PhaseRate eom_rhs(PhaseState const& state, FieldModel const& model,
                  ParticleParams const& params,
                  VelocityPrescription prescription)
{
    Evaluation const ev = evaluate(state, model, params, prescription);
    return {ev.dh_dpi, -ev.dh_dx, state.s.cross(ev.f_pi)};
}

}  // namespace spinfw::classical
