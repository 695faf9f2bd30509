#include "spinfw/core/field_model.hpp"

#include <cmath>
#include <numbers>

namespace spinfw
{

FieldSample& FieldSample::operator+=(FieldSample const& other)
{
    phi += other.phi;
    a += other.a;
    e += other.e;
    b += other.b;
    div_e += other.div_e;
    grad_b += other.grad_b;
    grad_e += other.grad_e;
    grad_phi += other.grad_phi;
    jac_a += other.jac_a;
    return *this;
}

namespace
{

FieldSample sample(UniformField const& f, ThreeVector const& x)
{
    FieldSample out;
    out.phi = -f.e0.dot(x);
    out.grad_phi = -f.e0;
    out.e = f.e0;
    out.b = f.b0;
    out.a = 0.5 * f.b0.cross(x);
    // A_i = (1/2) eps_ijk B_j x_k  =>  dA_i/dx_k = (1/2) eps_ijk B_j
    for (int i = 0; i < 3; ++i)
    {
        for (int k = 0; k < 3; ++k)
        {
            double sum = 0;
            for (int j = 0; j < 3; ++j)
            {
                sum += levi_civita(i, j, k) * f.b0[j];
            }
            out.jac_a(i, k) = 0.5 * sum;
        }
    }
    return out;
}

FieldSample sample(SternGerlachField const& f, ThreeVector const& x)
{
    FieldSample out;
    double const bz = f.b0 + f.gradient * x.z();
    out.b = {-0.5 * f.gradient * x.x(), -0.5 * f.gradient * x.y(), bz};
    out.grad_b(0, 0) = -0.5 * f.gradient;
    out.grad_b(1, 1) = -0.5 * f.gradient;
    out.grad_b(2, 2) = f.gradient;
    // A = (B0 + b z) (-y/2, x/2, 0)
    out.a = {-0.5 * bz * x.y(), 0.5 * bz * x.x(), 0};
    out.jac_a(0, 1) = -0.5 * bz;
    out.jac_a(0, 2) = -0.5 * f.gradient * x.y();
    out.jac_a(1, 0) = 0.5 * bz;
    out.jac_a(1, 2) = 0.5 * f.gradient * x.x();
    return out;
}

FieldSample sample(SinusoidalElectrostatic const& f, ThreeVector const& x)
{
    FieldSample out;
    double const k = 2 * std::numbers::pi / f.period;
    double const s = std::sin(k * x.x());
    double const c = std::cos(k * x.x());
    out.phi = f.amplitude / k * c;
    out.grad_phi = {-f.amplitude * s, 0, 0};
    out.e = {f.amplitude * s, 0, 0};
    out.grad_e(0, 0) = f.amplitude * k * c;
    out.div_e = f.amplitude * k * c;
    return out;
}

FieldSample sample(SinusoidalMagnetostatic const& f, ThreeVector const& x)
{
    FieldSample out;
    double const k = 2 * std::numbers::pi / f.period;
    double const s = std::sin(k * x.x());
    double const c = std::cos(k * x.x());
    out.a = {0, f.amplitude / k * s, 0};
    out.jac_a(1, 0) = f.amplitude * c;
    out.b = {0, 0, f.amplitude * c};
    out.grad_b(2, 0) = -f.amplitude * k * s;
    return out;
}

FieldSample sample(Superposition const& f, ThreeVector const& x)
{
    FieldSample out;
    for (auto const& part : f.parts)
    {
        out += sample_field(part, x);
    }
    return out;
}

}  // namespace

std::string FieldModel::kind() const
{
    struct Visitor
    {
        std::string operator()(UniformField const&) const { return "uniform"; }
        std::string operator()(SternGerlachField const&) const
        {
            return "stern_gerlach";
        }
        std::string operator()(SinusoidalElectrostatic const&) const
        {
            return "sinusoidal_electrostatic";
        }
        std::string operator()(SinusoidalMagnetostatic const&) const
        {
            return "sinusoidal_magnetostatic";
        }
        std::string operator()(Superposition const&) const
        {
            return "superposition";
        }
    };
    return std::visit(Visitor{}, model_);
}

FieldSample sample_field(FieldModel const& model, ThreeVector const& x)
{
    return std::visit([&x](auto const& m) { return sample(m, x); },
                      model.variant());
}

ThreeVector kinematic_momentum(ThreeVector const& p, ThreeVector const& a,
                               ParticleParams const& params)
{
    return p - (params.e() / params.c()) * a;
}

double gamma_pi(ThreeVector const& pi, ParticleParams const& params)
{
    double const mc = params.m() * params.c();
    return std::sqrt(1 + pi.squaredNorm() / (mc * mc));
}

ThreeVector v_pi(ThreeVector const& pi, ParticleParams const& params)
{
    return pi / (gamma_pi(pi, params) * params.m());
}

}  // namespace spinfw
