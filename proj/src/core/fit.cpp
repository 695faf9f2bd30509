#include "spinfw/core/fit.hpp"

#include <cmath>

#include "spinfw/core/errors.hpp"

namespace spinfw
{

double log_log_slope(std::vector<double> const& x, std::vector<double> const& y)
{
    if (x.size() != y.size() || x.size() < 2)
    {
        throw DiagnosticError("slope fit needs at least two (x, y) pairs");
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    auto const n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] > 0) || !(y[i] > 0) || !std::isfinite(x[i])
            || !std::isfinite(y[i]))
        {
            throw DiagnosticError("slope fit needs positive finite values");
        }
        double const lx = std::log(x[i]);
        double const ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double const den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-14 * (1 + sxx))
    {
        throw DiagnosticError("slope fit is degenerate: abscissae coincide");
    }
    return (n * sxy - sx * sy) / den;
}

}  // namespace spinfw
