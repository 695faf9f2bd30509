#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spinfw/opalg/expr.hpp"

namespace spinfw::opalg
{

struct AlgebraOptions
{
    //! Classical limit: every letter commutes.
    bool commuting{false};
    //! Homogeneous fields: all derivative symbols vanish.
    bool uniform_fields{false};
    //! e = 0: [pi_i, pi_j] vanishes and terms with positive e power drop.
    bool neutral{false};
    //! Highest admissible derivative order; higher ones are dropped and
    //! counted. Negative means unlimited.
    int max_derivative_order{2};

    friend bool operator==(AlgebraOptions const&, AlgebraOptions const&) = default;
};

//! Number of monomials dropped for exceeding max_derivative_order.
std::uint64_t dropped_derivative_terms();
void reset_dropped_derivative_terms();

//! Canonical monomial: params * slot * field symbol (optional) * pi^alpha.
struct Key
{
    Params params;
    Slot slot;
    Symbol field;  //!< kind None when field-free
    std::array<std::uint8_t, 3> pi{};

    int pi_degree() const { return pi[0] + pi[1] + pi[2]; }
    friend bool operator==(Key const&, Key const&) = default;
    friend auto operator<=>(Key const&, Key const&) = default;
};

struct KeyHash
{
    std::size_t operator()(Key const& k) const noexcept;
};

/*!
 * Expression with every monomial in canonical order: field symbol leftmost,
 * then pi factors sorted by component. Equality is exact.
 */
class CanonicalForm
{
  public:
    using Map = std::unordered_map<Key, Scalar, KeyHash>;

    CanonicalForm() = default;
    static CanonicalForm scalar(Scalar s, Params p = {});
    static CanonicalForm monomial(Key k, Scalar s = 1);

    //! Accumulates; d3 B3 is rewritten through div B = 0.
    void add(Key const& k, Scalar const& s);
    Map const& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    //! Coefficient of a monomial, zero when absent.
    Scalar coefficient(Key const& k) const;

    //! Terms sorted by key, for deterministic output.
    std::vector<std::pair<Key, Scalar>> sorted() const;

    CanonicalForm& operator+=(CanonicalForm const& o);
    CanonicalForm& operator-=(CanonicalForm const& o);
    friend CanonicalForm operator+(CanonicalForm a, CanonicalForm const& b) { return a += b; }
    friend CanonicalForm operator-(CanonicalForm a, CanonicalForm const& b) { return a -= b; }
    CanonicalForm operator-() const;
    friend CanonicalForm operator*(Scalar const& s, CanonicalForm a);
    //! Multiplies every monomial by a parameter monomial and a slot.
    CanonicalForm scaled(Params const& p, Slot s = {}) const;

    friend bool operator==(CanonicalForm const& a, CanonicalForm const& b)
    {
        return a.terms_ == b.terms_;
    }

  private:
    Map terms_;
};

//! Normal form via the closed-form product rules.
CanonicalForm canonicalize(OpExpr const& a, AlgebraOptions const& opts = {});

//! Product of canonical forms, re-truncated to linear order in fields.
CanonicalForm multiply(CanonicalForm const& a, CanonicalForm const& b,
                       AlgebraOptions const& opts = {});

//! Word-level view of a canonical form.
OpExpr to_expr(CanonicalForm const& a);

//! Removes monomials the options declare zero (e > 0 when neutral, derivative
//! symbols when uniform, overlong derivatives).
CanonicalForm apply_options(CanonicalForm const& a, AlgebraOptions const& opts);

//! Components and contractions of vector operators.
using VectorForm = std::array<CanonicalForm, 3>;

VectorForm pi_vector_form();
VectorForm field_vector_form(FieldKind k);
VectorForm slot_vector_form(Slot (*make)(int));

CanonicalForm dot(VectorForm const& a, VectorForm const& b,
                  AlgebraOptions const& opts = {});
VectorForm cross(VectorForm const& a, VectorForm const& b,
                 AlgebraOptions const& opts = {});

}  // namespace spinfw::opalg
