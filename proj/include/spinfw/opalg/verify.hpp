#pragma once

#include <map>
#include <string>

#include <Eigen/Dense>

#include "spinfw/opalg/ordering.hpp"

namespace spinfw::opalg
{

struct CaseVerification
{
    Case which{Case::I};
    int order{0};
    bool zero{false};
    CanonicalForm discrepancy;
    std::size_t series_terms{0};
    std::size_t closed_form_terms{0};
};

/*!
 * Closed Weyl-ordered form expanded to order N:
 *   case I:  beta sqrt(m^2c^4 + c^2 pi^2) - beta (e hbar / 2mc)(sigma.B / gamma_pi)_W
 *   case II: beta sqrt(m^2c^4 + c^2 pi^2) - (mu' hbar / 2mc)(div E / gamma_pi)_W
 *            + (mu'/mc)(sigma.(pi x E)bar / gamma_pi)_W
 * with sqrt and 1/gamma_pi replaced by their binomial series.
 */
CanonicalForm closed_form_expansion(Case c, int order, AlgebraOptions const& opts);

//! closed_form_expansion - series_sqrt_expand; throws InputError for N < 0.
CaseVerification verify_case(Case c, int order, int max_derivative_order = 2);

/*!
 * True when d is a combination of reorderings over pi^2:
 * pi_j X pi_j - X pi^2 and pi^2 X - X pi^2 for field words X.
 */
bool in_pi_squared_reordering_span(CanonicalForm const& d,
                                   AlgebraOptions const& opts);

struct MatchupResult
{
    //! 4 (pi x (pi x B)bar)bar equals the eight-word epsilon expansion exactly.
    bool expansion_identity{false};
    //! Commuting symbols: pi x (pi x B) = (pi.B) pi - pi^2 B.
    bool commuting_limit{false};
    //! Uniform B: strict equality without reordering.
    bool homogeneous_strict{false};
    //! Full algebra: equality modulo reorderings over pi^2, times pi^{2k}, k <= N.
    bool reordering_equivalent{false};
    //! Full-algebra difference (component-wise, before the reordering test).
    VectorForm residual;

    bool ok() const
    {
        return expansion_identity && commuting_limit && homogeneous_strict
               && reordering_equivalent;
    }
};

MatchupResult verify_matchup(int order = 2);

struct PauliCheck
{
    //! (alpha.pi)^2 = pi^2 - (hbar e / c) sigma.B
    bool pi_pi{false};
    //! Commuting symbols: textbook identity, pi x pi = 0.
    bool commuting_symbols{false};
    //! A = p, B = E (e = 0): identity holds and p.E - E.p = -i hbar div E.
    bool pi_e_reduction{false};
    //! Odd operators squared reproduce c^2 Omega in both cases.
    bool odd_square_case_i{false};
    bool odd_square_case_ii{false};

    bool ok() const
    {
        return pi_pi && commuting_symbols && pi_e_reduction && odd_square_case_i
               && odd_square_case_ii;
    }
};

PauliCheck pauli_identity_check();

//! alpha . V
CanonicalForm alpha_dot(VectorForm const& v);

/*!
 * Darwin coefficient (hbar^2 / 4mc)(3e / 2mc - gamma_m) with
 * gamma_m = e/(mc) + 2 mu'/hbar, as a parameter polynomial.
 */
CanonicalForm darwin_coefficient_symbolic();

//! Evaluates a field-free, pi-free, identity-slot form at rational parameters.
Scalar evaluate_parameters(CanonicalForm const& a,
                           std::map<Param, mpq_class> const& values);

//! Drops monomials in which a parameter appears with positive power
//! (setting it to zero).
CanonicalForm set_parameter_zero(CanonicalForm const& a, Param p);

/*!
 * Numeric shadow: parameters at the given values, slot replaced by its 4x4
 * Dirac matrix. Returns one matrix per (field, pi) operator monomial.
 */
using ShadowMap = std::map<std::string, Eigen::Matrix4cd>;
ShadowMap shadow_evaluate(CanonicalForm const& a,
                          std::map<Param, double> const& values);

//! 4x4 matrix of a slot element.
Eigen::Matrix4cd slot_matrix(Slot s);

}  // namespace spinfw::opalg
