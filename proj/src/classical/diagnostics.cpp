#include "spinfw/classical/diagnostics.hpp"

#include <cmath>
#include <sstream>

#include "spinfw/core/fit.hpp"

namespace spinfw::classical
{

FourVector extra_four_force(PhaseState const& state, FieldModel const& model,
                            ParticleParams const& params,
                            VelocityPrescription prescription)
{
    FieldSample const f = sample_field(model, state.x);
    ThreeVector const pi = kinematic_momentum(state.p, f.a, params);
    double const g = gamma_pi(pi, params);
    ThreeVector const v = pi / (g * params.m());
    PhaseRate const rate = eom_rhs(state, model, params, prescription);
    ThreeVector const dpi
        = rate.dp - (params.e() / params.c()) * (f.jac_a * rate.dx);
    ThreeVector const lorentz
        = params.e() * (f.e + v.cross(f.b) / params.c());
    ThreeVector const fs = g * (dpi - lorentz);
    return make_four_vector(fs.dot(v) / params.c(), fs);
}

FourVector spin_four_vector_rate(PhaseState const& state,
                                 FieldModel const& model,
                                 ParticleParams const& params,
                                 VelocityPrescription prescription)
{
    // S^0 = pi.s/(mc), S = s + pi (pi.s) / (m^2 c^2 (g + 1))
    FieldSample const f = sample_field(model, state.x);
    ThreeVector const pi = kinematic_momentum(state.p, f.a, params);
    double const g = gamma_pi(pi, params);
    double const mc = params.m() * params.c();
    PhaseRate const rate = eom_rhs(state, model, params, prescription);
    ThreeVector const dpi
        = rate.dp - (params.e() / params.c()) * (f.jac_a * rate.dx);
    ThreeVector const& s = state.s;
    ThreeVector const& ds = rate.ds;
    double const ps = pi.dot(s);
    double const dps = dpi.dot(s) + pi.dot(ds);
    double const dg = pi.dot(dpi) / (mc * mc * g);
    double const k = 1 / (mc * mc * (g + 1));
    ThreeVector const dspatial
        = ds + k * (dpi * ps + pi * dps) - k / (g + 1) * dg * ps * pi;
    return g * make_four_vector(dps / mc, dspatial);
}

ThreeVector force_thomas_precession(PhaseState const& state,
                                    FieldModel const& model,
                                    ParticleParams const& params,
                                    VelocityPrescription prescription)
{
    FieldSample const f = sample_field(model, state.x);
    ThreeVector const pi = kinematic_momentum(state.p, f.a, params);
    double const g = gamma_pi(pi, params);
    double const c = params.c();
    ThreeVector const v = pi / (g * params.m());
    // d(g m v)/dt contributed by f, then the matching dv/dt
    ThreeVector const dpi_f
        = spatial(extra_four_force(state, model, params, prescription)) / g;
    ThreeVector const a
        = (dpi_f - v * v.dot(dpi_f) / (c * c)) / (g * params.m());
    return g * g / (g + 1) * a.cross(v) / (c * c);
}

namespace
{

// Change of dS/dtau_pi produced by an extra spin rate ds at fixed pi.
FourVector lift_spin_rate(ThreeVector const& ds, ThreeVector const& pi,
                          ParticleParams const& params)
{
    double const g = gamma_pi(pi, params);
    double const mc = params.m() * params.c();
    double const k = 1 / (mc * mc * (g + 1));
    return g * make_four_vector(pi.dot(ds) / mc, ds + k * pi * pi.dot(ds));
}

}  // namespace

BmtResidual bmt_consistency_residual(Trajectory const& traj,
                                     FieldModel const& model,
                                     ParticleParams const& params,
                                     BmtResidualOptions const& options)
{
    auto const& samples = traj.samples;
    std::size_t const n = samples.size();
    if (n < 5)
    {
        throw DiagnosticError("BMT residual needs at least five samples");
    }
    double const dt = samples[1].t - samples[0].t;
    for (std::size_t i = 1; i < n; ++i)
    {
        double const step = samples[i].t - samples[i - 1].t;
        if (!(std::abs(step - dt) <= 1e-9 * std::abs(dt)))
        {
            throw DiagnosticError("BMT residual needs uniformly sampled data");
        }
    }

    double const c = params.c();
    std::vector<FourVector> spin(n);
    std::vector<FourVector> velocity(n);
    std::vector<FieldSample> fields(n);
    BmtResidual out;
    for (std::size_t i = 0; i < n; ++i)
    {
        PhaseState const& st = samples[i].state;
        fields[i] = sample_field(model, st.x);
        ThreeVector const pi = kinematic_momentum(st.p, fields[i].a, params);
        spin[i] = lorentz::spin_four_vector_lab(st.s, pi, params);
        velocity[i] = lorentz::four_velocity_pi(pi, params);

        double const g = samples[i].gamma_pi;
        double const omega = std::max(
            precession_vector(pi, fields[i].e, fields[i].b, params).norm(),
            std::abs(params.e()) * fields[i].b.norm() / (g * params.m() * c));
        if (omega * dt > options.max_phase_per_step)
        {
            std::ostringstream os;
            os << "trajectory too coarse for BMT residual: rotation "
               << omega * dt << " rad per sample at t = " << samples[i].t;
            throw DiagnosticError(os.str());
        }
        out.max_gamma_difference
            = std::max(out.max_gamma_difference,
                       std::abs(samples[i].gamma_velocity - g));
    }

    for (std::size_t i = 2; i + 2 < n; ++i)
    {
        FourVector const ds_dt = (-spin[i + 2] + 8 * spin[i + 1]
                                  - 8 * spin[i - 1] + spin[i - 2])
                                 / (12 * dt);
        FourVector const ds_dtau = samples[i].gamma_pi * ds_dt;
        FourVector force = FourVector::Zero();
        if (options.include_force)
        {
            force = extra_four_force(samples[i].state, model, params,
                                     traj.prescription);
        }
        lorentz::FieldTensor const ft
            = lorentz::field_tensor(fields[i].e, fields[i].b);
        FourVector const rhs
            = lorentz::bmt_rhs(spin[i], velocity[i], ft, force, params);
        FourVector const exact = spin_four_vector_rate(
            samples[i].state, model, params, traj.prescription);
        out.max_residual
            = std::max(out.max_residual, (ds_dtau - rhs).cwiseAbs().maxCoeff());
        out.max_analytic_residual
            = std::max(out.max_analytic_residual,
                       (exact - rhs).cwiseAbs().maxCoeff());
        out.max_stencil_error
            = std::max(out.max_stencil_error,
                       (ds_dtau - exact).cwiseAbs().maxCoeff());
        ThreeVector const pi = spatial(velocity[i]) * params.m();
        ThreeVector const thomas
            = force_thomas_precession(samples[i].state, model, params,
                                      traj.prescription)
                  .cross(samples[i].state.s);
        FourVector const corrected = exact + lift_spin_rate(thomas, pi, params);
        out.max_thomas_corrected_residual
            = std::max(out.max_thomas_corrected_residual,
                       (corrected - rhs).cwiseAbs().maxCoeff());
        ++out.evaluated_samples;
    }
    return out;
}

double darwin_classical_hd(PhaseState const& state, FieldModel const& model,
                           ParticleParams const& params, double a_d)
{
    FieldSample const f = sample_field(model, state.x);
    ThreeVector const v
        = v_pi(kinematic_momentum(state.p, f.a, params), params);
    ThreeVector curl_b;
    for (int i = 0; i < 3; ++i)
    {
        double sum = 0;
        for (int j = 0; j < 3; ++j)
        {
            for (int k = 0; k < 3; ++k)
            {
                sum += levi_civita(i, j, k) * f.grad_b(k, j);
            }
        }
        curl_b[i] = sum;
    }
    double const c = params.c();
    return c * a_d * (f.div_e - v.dot(curl_b) / c);
}

ThreeVector boost_covariance_residual(ThreeVector const& pi,
                                      ThreeVector const& e,
                                      ThreeVector const& b,
                                      ThreeVector const& beta,
                                      ParticleParams const& params)
{
    double const gamma = lorentz::lorentz_gamma(beta);
    double const mc = params.m() * params.c();
    FourVector const pi4 = make_four_vector(gamma_pi(pi, params) * mc, pi);
    ThreeVector const pi_boosted
        = spatial(lorentz::boost_four_vector(pi4, beta));
    auto const [e_boosted, b_boosted] = lorentz::boost_fields(e, b, beta);
    return gamma * precession_vector(pi, e, b, params)
           - precession_vector(pi_boosted, e_boosted, b_boosted, params);
}

ScalingResult boost_covariance_scaling(ThreeVector const& pi,
                                       ThreeVector const& e_unit,
                                       ThreeVector const& b_unit,
                                       ThreeVector const& beta,
                                       ParticleParams const& params,
                                       std::vector<double> const& amplitudes)
{
    ScalingResult out;
    out.amplitudes = amplitudes;
    for (double lambda : amplitudes)
    {
        out.residuals.push_back(
            boost_covariance_residual(pi, lambda * e_unit, lambda * b_unit,
                                      beta, params)
                .norm());
    }
    out.slope = log_log_slope(out.amplitudes, out.residuals);
    return out;
}

}  // namespace spinfw::classical
