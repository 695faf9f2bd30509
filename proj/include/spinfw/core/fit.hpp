#pragma once

#include <vector>

namespace spinfw
{

//! Least-squares slope of log(y) against log(x); throws DiagnosticError when
//! fewer than two points are usable or the abscissae coincide.
double log_log_slope(std::vector<double> const& x, std::vector<double> const& y);

}  // namespace spinfw
