#pragma once

#include <cmath>
#include <random>

#include "spinfw/core/types.hpp"

namespace spinfw::test
{

inline ThreeVector random_vector(std::mt19937_64& rng, double scale = 1)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng)};
}

inline double relative(double a, double b)
{
    return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace spinfw::test
