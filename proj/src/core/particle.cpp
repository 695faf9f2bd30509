#include "spinfw/core/particle.hpp"

#include <cmath>
#include <string>

#include "spinfw/core/errors.hpp"

namespace spinfw
{

namespace
{
void check_positive(double value, char const* name)
{
    if (!(value > 0) || !std::isfinite(value))
    {
        throw ConfigurationError(std::string(name)
                                 + " must be positive and finite");
    }
}

void check_finite(double value, char const* name)
{
    if (!std::isfinite(value))
    {
        throw ConfigurationError(std::string(name) + " must be finite");
    }
}
}  // namespace

ParticleParams::ParticleParams(double m, double e, double gamma_m,
                               double mu_prime, double hbar, double c)
    : m_(m), e_(e), gamma_m_(gamma_m), mu_prime_(mu_prime), hbar_(hbar), c_(c)
{
    check_positive(m, "mass");
    check_positive(hbar, "hbar");
    check_positive(c, "c");
    check_finite(e, "charge");
    check_finite(gamma_m, "gyromagnetic ratio");
    check_finite(mu_prime, "anomalous moment");
}

ParticleParams ParticleParams::from_anomalous_moment(
    double m, double e, double mu_prime, double hbar, double c)
{
    check_positive(m, "mass");
    check_positive(hbar, "hbar");
    check_positive(c, "c");
    double gamma_m = e / (m * c) + 2 * mu_prime / hbar;
    return ParticleParams(m, e, gamma_m, mu_prime, hbar, c);
}

ParticleParams ParticleParams::from_gyromagnetic_ratio(
    double m, double e, double gamma_m, double hbar, double c)
{
    check_positive(m, "mass");
    check_positive(hbar, "hbar");
    check_positive(c, "c");
    double mu_prime = (gamma_m - e / (m * c)) * hbar / 2;
    return ParticleParams(m, e, gamma_m, mu_prime, hbar, c);
}

}  // namespace spinfw
