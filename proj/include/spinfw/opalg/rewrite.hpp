#pragma once

#include <cstdint>

#include "spinfw/opalg/canonical.hpp"

namespace spinfw::opalg
{

enum class RewriteStrategy
{
    Leftmost,
    Rightmost,
    Random
};

struct RewriteStats
{
    std::uint64_t steps{0};
};

/*!
 * Normal form by single-step rewriting of adjacent letters:
 *   pi_i f        -> f pi_i - i hbar (d_i f)
 *   pi_i pi_j     -> pi_j pi_i + i (hbar e / c) eps_ijl B_l   (i > j, field-free word)
 *   pi_i pi_j     -> pi_j pi_i                                (i > j, word with a field)
 * The strategy picks which redex fires; the seed drives Random.
 */
CanonicalForm rewrite_to_normal_form(OpExpr const& a, AlgebraOptions const& opts,
                                     RewriteStrategy strategy,
                                     std::uint64_t seed = 0,
                                     RewriteStats* stats = nullptr);

}  // namespace spinfw::opalg
