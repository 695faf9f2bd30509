#pragma once

#include "spinfw/opalg/canonical.hpp"

namespace spinfw::opalg
{

//! Case I: charged Dirac particle (mu' = 0) in a magnetostatic field.
//! Case II: neutral particle (e = 0) with anomalous moment in an electrostatic field.
enum class Case
{
    I,
    II
};

char const* case_name(Case c);

//! Options for a case: case II is neutral.
AlgebraOptions case_options(Case c, int max_derivative_order = 2);

//! Parameter monomial h^a c^b m^d e^f mu'^g.
Params param_monomial(int hbar, int c, int m, int e = 0, int mu = 0);

//! (pi . pi)^n, cached per thread and options.
CanonicalForm pi_squared_power(int n, AlgebraOptions const& opts = {});

/*!
 * (X pi^{2n})_Weyl = 1/(n+1) sum_l pi^{2l} X pi^{2n-2l}.
 * Throws InputError unless every monomial of X holds exactly one field symbol,
 * or when n < 0.
 */
CanonicalForm weyl_order(CanonicalForm const& x, int n,
                         AlgebraOptions const& opts = {});

//! 1/4 [(pi.F + F.pi) pi + pi (pi.F + F.pi)]
VectorForm sym_dot_pipi(VectorForm const& f, AlgebraOptions const& opts = {});
VectorForm sym_dot_pipi(FieldKind k, AlgebraOptions const& opts = {});

//! 1/2 (pi x F - F x pi)
VectorForm sym_cross(VectorForm const& f, AlgebraOptions const& opts = {});
VectorForm sym_cross(FieldKind k, AlgebraOptions const& opts = {});

//! sigma . V
CanonicalForm sigma_dot(VectorForm const& v);

/*!
 * Case I:  Omega = pi^2 - (e hbar / c) sigma.B
 * Case II: Omega = pi^2 - (mu' hbar / c) beta div E + (2 mu' / c) beta sigma.(pi x E)bar
 */
CanonicalForm omega(Case c, AlgebraOptions const& opts);
//! Omega - pi^2: the part linear in the fields.
CanonicalForm omega_field_part(Case c, AlgebraOptions const& opts);

//! Omega^n by repeated left multiplication.
CanonicalForm omega_power(Case c, int n, AlgebraOptions const& opts);
CanonicalForm omega_power(Case c, int n);

//! pi^{2n} - n (X pi^{2n-2})_Weyl with X = Omega - pi^2.
CanonicalForm omega_power_closed_form(Case c, int n, AlgebraOptions const& opts);

//! beta m c^2 sum_{n=0}^{N} C(1/2, n) (Omega / m^2 c^2)^n
CanonicalForm series_sqrt_expand(Case c, int order, AlgebraOptions const& opts);
CanonicalForm series_sqrt_expand(Case c, int order);

}  // namespace spinfw::opalg
