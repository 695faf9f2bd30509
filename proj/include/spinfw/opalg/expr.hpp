#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spinfw/opalg/scalar.hpp"

namespace spinfw::opalg
{

//! Commuting scalar parameters carried as integer exponents.
enum class Param : std::uint8_t
{
    Hbar = 0,
    C = 1,
    M = 2,
    E = 3,
    MuPrime = 4
};

inline constexpr int param_count = 5;

struct Params
{
    std::array<std::int8_t, param_count> exp{};

    static Params single(Param p, int power = 1)
    {
        Params out;
        out.exp[static_cast<int>(p)] = static_cast<std::int8_t>(power);
        return out;
    }
    int operator[](Param p) const { return exp[static_cast<int>(p)]; }
    Params& operator+=(Params const& o);
    friend Params operator+(Params a, Params const& b) { return a += b; }
    friend Params operator-(Params a, Params const& b);
    friend bool operator==(Params const&, Params const&) = default;
    friend auto operator<=>(Params const&, Params const&) = default;
};

/*!
 * Element rho_a (x) sigma_b of the Dirac matrix algebra, a, b in 0..3 with
 * index 0 the identity. beta = rho_3, alpha_i = rho_1 sigma_i.
 */
struct Slot
{
    std::uint8_t rho{0};
    std::uint8_t sigma{0};

    static Slot identity() { return {}; }
    static Slot beta() { return {3, 0}; }
    static Slot sigma_i(int i) { return {0, static_cast<std::uint8_t>(i + 1)}; }
    static Slot alpha_i(int i) { return {1, static_cast<std::uint8_t>(i + 1)}; }

    int index() const { return rho * 4 + sigma; }
    friend bool operator==(Slot const&, Slot const&) = default;
    friend auto operator<=>(Slot const&, Slot const&) = default;
};

//! Product of slots: returns (k, s) with a * b = i^k s.
std::pair<int, Slot> slot_product(Slot a, Slot b);

enum class FieldKind : std::uint8_t
{
    None = 0,
    E = 1,
    B = 2
};

/*!
 * A single letter: pi_comp when kind == None, otherwise the field component
 * F_comp differentiated d[j] times along x_j.
 */
struct Symbol
{
    FieldKind kind{FieldKind::None};
    std::uint8_t comp{0};
    std::array<std::uint8_t, 3> d{};

    static Symbol pi(int i) { return {FieldKind::None, static_cast<std::uint8_t>(i), {}}; }
    static Symbol field(FieldKind k, int i) { return {k, static_cast<std::uint8_t>(i), {}}; }

    bool is_field() const { return kind != FieldKind::None; }
    int derivative_order() const { return d[0] + d[1] + d[2]; }
    Symbol differentiated(int j, int times = 1) const
    {
        Symbol out = *this;
        out.d[j] = static_cast<std::uint8_t>(out.d[j] + times);
        return out;
    }
    friend bool operator==(Symbol const&, Symbol const&) = default;
    friend auto operator<=>(Symbol const&, Symbol const&) = default;
};

//! coefficient * params * slot * ordered word.
struct Term
{
    Scalar coef{1};
    Params params;
    Slot slot;
    std::vector<Symbol> word;

    int field_count() const;
};

/*!
 * Formal sum of ordered monomials. Words holding two or more field symbols
 * are dropped on construction and by every product.
 */
class OpExpr
{
  public:
    OpExpr() = default;
    explicit OpExpr(Term t) { add(std::move(t)); }

    static OpExpr scalar(Scalar s, Params p = {});
    static OpExpr pi(int i);
    static OpExpr field(FieldKind k, int i);
    static OpExpr slot(Slot s);
    static OpExpr param(Param p, int power = 1);

    //! Appends a term unless it is zero or holds two field symbols.
    void add(Term t);

    std::vector<Term> const& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    OpExpr& operator+=(OpExpr const& o);
    OpExpr& operator-=(OpExpr const& o);
    friend OpExpr operator+(OpExpr a, OpExpr const& b) { return a += b; }
    friend OpExpr operator-(OpExpr a, OpExpr const& b) { return a -= b; }
    OpExpr operator-() const;
    //! Formal (word-concatenating) product.
    friend OpExpr operator*(OpExpr const& a, OpExpr const& b);
    friend OpExpr operator*(Scalar const& s, OpExpr a);

  private:
    std::vector<Term> terms_;
};

//! Formal product truncated to linear order in fields.
OpExpr multiply(OpExpr const& a, OpExpr const& b);

//! Components of the vector operators pi, E, B, sigma and alpha.
std::array<OpExpr, 3> pi_vector();
std::array<OpExpr, 3> field_vector(FieldKind k);
std::array<OpExpr, 3> sigma_vector();
std::array<OpExpr, 3> alpha_vector();

}  // namespace spinfw::opalg
