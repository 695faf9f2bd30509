#include <cmath>
#include <sstream>

#include "spinfw/core/errors.hpp"
#include "spinfw/lorentz/lorentz.hpp"

namespace spinfw::lorentz
{

double lorentz_gamma(ThreeVector const& beta)
{
    double const beta2 = beta.squaredNorm();
    if (!(beta2 < 1))
    {
        std::ostringstream os;
        os << "boost velocity |beta| = " << std::sqrt(beta2)
           << " must be < 1";
        throw DomainError(os.str());
    }
    return 1 / std::sqrt(1 - beta2);
}

BoostMatrix boost_matrix(ThreeVector const& beta)
{
    double const gamma = lorentz_gamma(beta);
    double const beta2 = beta.squaredNorm();
    BoostMatrix lambda = BoostMatrix::Identity();
    lambda(0, 0) = gamma;
    for (int i = 0; i < 3; ++i)
    {
        lambda(i + 1, 0) = -gamma * beta[i];
        lambda(0, i + 1) = -gamma * beta[i];
    }
    if (beta2 > 0)
    {
        // (gamma - 1)/beta^2 = gamma^2/(gamma + 1) avoids 0/0 at small beta
        double const k = gamma * gamma / (gamma + 1);
        for (int i = 0; i < 3; ++i)
        {
            for (int j = 0; j < 3; ++j)
            {
                lambda(i + 1, j + 1) += k * beta[i] * beta[j];
            }
        }
    }
    return lambda;
}

std::pair<ThreeVector, ThreeVector>
boost_fields(ThreeVector const& e, ThreeVector const& b,
             ThreeVector const& beta)
{
    double const gamma = lorentz_gamma(beta);
    double const k = gamma * gamma / (gamma + 1);
    ThreeVector ep = gamma * (e + beta.cross(b)) - k * beta * beta.dot(e);
    ThreeVector bp = gamma * (b - beta.cross(e)) - k * beta * beta.dot(b);
    return {ep, bp};
}

FourVector boost_four_vector(FourVector const& v, ThreeVector const& beta)
{
    return boost_matrix(beta) * v;
}

FieldTensor field_tensor(ThreeVector const& e, ThreeVector const& b)
{
    FieldTensor f = FieldTensor::Zero();
    for (int i = 0; i < 3; ++i)
    {
        f(0, i + 1) = -e[i];
        f(i + 1, 0) = e[i];
        for (int j = 0; j < 3; ++j)
        {
            double sum = 0;
            for (int k = 0; k < 3; ++k)
            {
                sum += levi_civita(i, j, k) * b[k];
            }
            f(i + 1, j + 1) = -sum;
        }
    }
    return f;
}

std::pair<ThreeVector, ThreeVector> fields_from_tensor(FieldTensor const& f)
{
    ThreeVector e{-f(0, 1), -f(0, 2), -f(0, 3)};
    // F^{23} = -B_1, F^{31} = -B_2, F^{12} = -B_3
    ThreeVector b{-f(2, 3), -f(3, 1), -f(1, 2)};
    return {e, b};
}

}  // namespace spinfw::lorentz
