#include <cmath>
#include <sstream>

#include "spinfw/core/errors.hpp"
#include "spinfw/core/field_model.hpp"
#include "spinfw/lorentz/lorentz.hpp"

namespace spinfw::lorentz
{

int levi_civita4(int mu, int nu, int alpha, int beta)
{
    int const idx[4] = {mu, nu, alpha, beta};
    int sign = 1;
    for (int i = 0; i < 4; ++i)
    {
        for (int j = i + 1; j < 4; ++j)
        {
            if (idx[i] == idx[j])
            {
                return 0;
            }
            if (idx[i] > idx[j])
            {
                sign = -sign;
            }
        }
    }
    return sign;
}

namespace
{

void check_velocity(FourVector const& u, double c)
{
    double const uu = minkowski_dot(u, u);
    if (std::abs(uu - c * c) > constraint_precondition_tol * c * c)
    {
        std::ostringstream os;
        os << "four-velocity constraint violated: U.U - c^2 = " << uu - c * c;
        throw PreconditionError(os.str());
    }
}

// |U.S| relative to |U|_E |S|_E, with Euclidean component norms.
void check_orthogonal(FourVector const& s, FourVector const& u, double tol)
{
    double const us = minkowski_dot(u, s);
    double const scale = u.norm() * s.norm();
    if (std::abs(us) > tol * scale)
    {
        std::ostringstream os;
        os << "spin constraint violated: U.S = " << us;
        throw PreconditionError(os.str());
    }
}

}  // namespace

SpinTensor spin_tensor_from_vector(FourVector const& s, FourVector const& u,
                                   double c)
{
    check_velocity(u, c);
    check_orthogonal(s, u, constraint_precondition_tol);
    FourVector const ul = lower(u);
    FourVector const sl = lower(s);
    SpinTensor out = SpinTensor::Zero();
    for (int mu = 0; mu < 4; ++mu)
    {
        for (int nu = mu + 1; nu < 4; ++nu)
        {
            double sum = 0;
            for (int a = 0; a < 4; ++a)
            {
                for (int b = 0; b < 4; ++b)
                {
                    int const eps = levi_civita4(mu, nu, a, b);
                    if (eps != 0)
                    {
                        sum += eps * ul[a] * sl[b];
                    }
                }
            }
            out(mu, nu) = sum / c;
            out(nu, mu) = -sum / c;
        }
    }
    return out;
}

FourVector spin_vector_from_tensor(SpinTensor const& s, FourVector const& u,
                                   double c)
{
    Matrix4 const g = metric();
    Matrix4 const s_low = g * s * g;
    FourVector const ul = lower(u);
    FourVector out = FourVector::Zero();
    for (int a = 0; a < 4; ++a)
    {
        double sum = 0;
        for (int b = 0; b < 4; ++b)
        {
            for (int gm = 0; gm < 4; ++gm)
            {
                for (int d = 0; d < 4; ++d)
                {
                    int const eps = levi_civita4(a, b, gm, d);
                    if (eps != 0)
                    {
                        sum += eps * ul[b] * s_low(gm, d);
                    }
                }
            }
        }
        out[a] = sum / (2 * c);
    }
    return out;
}

FourVector four_velocity_pi(ThreeVector const& pi, ParticleParams const& params)
{
    return make_four_vector(gamma_pi(pi, params) * params.c(), pi / params.m());
}

FourVector spin_four_vector_lab(ThreeVector const& s, ThreeVector const& pi,
                                ParticleParams const& params)
{
    double const gamma = gamma_pi(pi, params);
    ThreeVector const beta = pi / (gamma * params.m() * params.c());
    double const k = gamma * gamma / (gamma + 1);
    ThreeVector const spatial_part = s + k * beta * beta.dot(s);
    return make_four_vector(gamma * beta.dot(s), spatial_part);
}

FourVector bmt_rhs(FourVector const& s, FourVector const& u,
                   FieldTensor const& f_tensor, FourVector const& force,
                   ParticleParams const& params)
{
    check_orthogonal(s, u, bmt_precondition_tol);
    double const c = params.c();
    FourVector const sl = lower(s);
    FourVector const ul = lower(u);
    double const sfu = sl.dot(f_tensor * ul);
    double const sf = minkowski_dot(s, force);
    return params.gamma_m() * (f_tensor * sl)
           + (params.anomalous_gyromagnetic() / (c * c)) * sfu * u
           - sf / (params.m() * c * c) * u;
}

FourVector lorentz_force_rhs(FourVector const& u, FieldTensor const& f_tensor,
                             FourVector const& force,
                             ParticleParams const& params)
{
    return ((params.e() / params.c()) * (f_tensor * lower(u)) + force)
           / params.m();
}

}  // namespace spinfw::lorentz
