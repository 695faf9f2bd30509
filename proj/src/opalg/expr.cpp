#include "spinfw/opalg/expr.hpp"

namespace spinfw::opalg
{

Params& Params::operator+=(Params const& o)
{
    for (int i = 0; i < param_count; ++i)
    {
        exp[i] = static_cast<std::int8_t>(exp[i] + o.exp[i]);
    }
    return *this;
}

Params operator-(Params a, Params const& b)
{
    for (int i = 0; i < param_count; ++i)
    {
        a.exp[i] = static_cast<std::int8_t>(a.exp[i] - b.exp[i]);
    }
    return a;
}

namespace
{

// Pauli-type product on indices 0..3: returns (k, c) with s_a s_b = i^k s_c.
std::pair<int, int> pauli(int a, int b)
{
    if (a == 0)
    {
        return {0, b};
    }
    if (b == 0 || a == b)
    {
        return {0, a == b ? 0 : a};
    }
    int const c = 6 - a - b;
    bool const cyclic = (a % 3) + 1 == b;
    return {cyclic ? 1 : 3, c};
}

}  // namespace

std::pair<int, Slot> slot_product(Slot a, Slot b)
{
    auto const [kr, r] = pauli(a.rho, b.rho);
    auto const [ks, s] = pauli(a.sigma, b.sigma);
    return {(kr + ks) % 4,
            Slot{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(s)}};
}

int Term::field_count() const
{
    int n = 0;
    for (Symbol const& s : word)
    {
        n += s.is_field() ? 1 : 0;
    }
    return n;
}

OpExpr OpExpr::scalar(Scalar s, Params p)
{
    Term t;
    t.coef = std::move(s);
    t.params = p;
    return OpExpr(std::move(t));
}

OpExpr OpExpr::pi(int i)
{
    Term t;
    t.word.push_back(Symbol::pi(i));
    return OpExpr(std::move(t));
}

OpExpr OpExpr::field(FieldKind k, int i)
{
    Term t;
    t.word.push_back(Symbol::field(k, i));
    return OpExpr(std::move(t));
}

OpExpr OpExpr::slot(Slot s)
{
    Term t;
    t.slot = s;
    return OpExpr(std::move(t));
}

OpExpr OpExpr::param(Param p, int power)
{
    return scalar(1, Params::single(p, power));
}

void OpExpr::add(Term t)
{
    if (t.coef.is_zero() || t.field_count() > 1)
    {
        return;
    }
    terms_.push_back(std::move(t));
}

OpExpr& OpExpr::operator+=(OpExpr const& o)
{
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

OpExpr& OpExpr::operator-=(OpExpr const& o)
{
    return *this += -o;
}

OpExpr OpExpr::operator-() const
{
    OpExpr out = *this;
    for (Term& t : out.terms_)
    {
        t.coef = -t.coef;
    }
    return out;
}

OpExpr operator*(OpExpr const& a, OpExpr const& b)
{
    OpExpr out;
    for (Term const& x : a.terms_)
    {
        for (Term const& y : b.terms_)
        {
            if (x.field_count() + y.field_count() > 1)
            {
                continue;
            }
            auto const [k, slot] = slot_product(x.slot, y.slot);
            Term t;
            t.coef = (x.coef * y.coef).times_i_power(k);
            t.params = x.params + y.params;
            t.slot = slot;
            t.word = x.word;
            t.word.insert(t.word.end(), y.word.begin(), y.word.end());
            out.add(std::move(t));
        }
    }
    return out;
}

OpExpr operator*(Scalar const& s, OpExpr a)
{
    for (Term& t : a.terms_)
    {
        t.coef *= s;
    }
    return a;
}

OpExpr multiply(OpExpr const& a, OpExpr const& b)
{
    return a * b;
}

std::array<OpExpr, 3> pi_vector()
{
    return {OpExpr::pi(0), OpExpr::pi(1), OpExpr::pi(2)};
}

std::array<OpExpr, 3> field_vector(FieldKind k)
{
    return {OpExpr::field(k, 0), OpExpr::field(k, 1), OpExpr::field(k, 2)};
}

std::array<OpExpr, 3> sigma_vector()
{
    return {OpExpr::slot(Slot::sigma_i(0)), OpExpr::slot(Slot::sigma_i(1)),
            OpExpr::slot(Slot::sigma_i(2))};
}

std::array<OpExpr, 3> alpha_vector()
{
    return {OpExpr::slot(Slot::alpha_i(0)), OpExpr::slot(Slot::alpha_i(1)),
            OpExpr::slot(Slot::alpha_i(2))};
}

}  // namespace spinfw::opalg
