#include "spinfw/opalg/ordering.hpp"

#include <deque>

#include "spinfw/core/errors.hpp"

namespace spinfw::opalg
{

namespace
{

struct PowerCache
{
    AlgebraOptions opts;
    int tag{0};
    std::vector<CanonicalForm> powers;
};

// Per-thread cache of successive powers of a base operator.
std::vector<CanonicalForm>& cache_for(int tag, AlgebraOptions const& opts)
{
    thread_local std::deque<PowerCache> caches;
    for (auto& c : caches)
    {
        if (c.tag == tag && c.opts == opts)
        {
            return c.powers;
        }
    }
    caches.push_back({opts, tag, {}});
    return caches.back().powers;
}

CanonicalForm power_of(CanonicalForm const& base, int tag, int n,
                       AlgebraOptions const& opts)
{
    if (n < 0)
    {
        throw InputError("negative operator power");
    }
    auto& powers = cache_for(tag, opts);
    if (powers.empty())
    {
        powers.push_back(CanonicalForm::scalar(1));
    }
    while (static_cast<int>(powers.size()) <= n)
    {
        powers.push_back(multiply(base, powers.back(), opts));
    }
    return powers[n];
}

CanonicalForm pi_squared(AlgebraOptions const& opts)
{
    VectorForm const pi = pi_vector_form();
    return dot(pi, pi, opts);
}

constexpr int tag_pi2 = 0;
constexpr int tag_omega_i = 1;
constexpr int tag_omega_ii = 2;

}  // namespace

char const* case_name(Case c)
{
    return c == Case::I ? "I" : "II";
}

AlgebraOptions case_options(Case c, int max_derivative_order)
{
    AlgebraOptions opts;
    opts.neutral = c == Case::II;
    opts.max_derivative_order = max_derivative_order;
    return opts;
}

Params param_monomial(int hbar, int c, int m, int e, int mu)
{
    return Params::single(Param::Hbar, hbar) + Params::single(Param::C, c)
           + Params::single(Param::M, m) + Params::single(Param::E, e)
           + Params::single(Param::MuPrime, mu);
}

CanonicalForm pi_squared_power(int n, AlgebraOptions const& opts)
{
    return power_of(pi_squared(opts), tag_pi2, n, opts);
}

CanonicalForm weyl_order(CanonicalForm const& x, int n, AlgebraOptions const& opts)
{
    if (n < 0)
    {
        throw InputError("weyl_order needs n >= 0");
    }
    for (auto const& [k, c] : x.terms())
    {
        if (!k.field.is_field())
        {
            throw InputError("weyl_order needs one field symbol in every monomial");
        }
    }
    CanonicalForm sum;
    for (int l = 0; l <= n; ++l)
    {
        CanonicalForm const left = multiply(pi_squared_power(l, opts), x, opts);
        sum += multiply(left, pi_squared_power(n - l, opts), opts);
    }
    return Scalar::fraction(1, n + 1) * sum;
}

VectorForm sym_dot_pipi(VectorForm const& f, AlgebraOptions const& opts)
{
    VectorForm const pi = pi_vector_form();
    CanonicalForm const s = dot(pi, f, opts) + dot(f, pi, opts);
    VectorForm out;
    for (int i = 0; i < 3; ++i)
    {
        out[i] = Scalar::fraction(1, 4)
                 * (multiply(s, pi[i], opts) + multiply(pi[i], s, opts));
    }
    return out;
}

VectorForm sym_dot_pipi(FieldKind k, AlgebraOptions const& opts)
{
    return sym_dot_pipi(field_vector_form(k), opts);
}

VectorForm sym_cross(VectorForm const& f, AlgebraOptions const& opts)
{
    VectorForm const pi = pi_vector_form();
    VectorForm const a = cross(pi, f, opts);
    VectorForm const b = cross(f, pi, opts);
    VectorForm out;
    for (int i = 0; i < 3; ++i)
    {
        out[i] = Scalar::fraction(1, 2) * (a[i] - b[i]);
    }
    return out;
}

VectorForm sym_cross(FieldKind k, AlgebraOptions const& opts)
{
    return sym_cross(field_vector_form(k), opts);
}

CanonicalForm sigma_dot(VectorForm const& v)
{
    CanonicalForm out;
    for (int i = 0; i < 3; ++i)
    {
        out += v[i].scaled({}, Slot::sigma_i(i));
    }
    return out;
}

CanonicalForm omega_field_part(Case c, AlgebraOptions const& opts)
{
    if (c == Case::I)
    {
        // -(e hbar / c) sigma.B
        return -sigma_dot(field_vector_form(FieldKind::B))
                    .scaled(param_monomial(1, -1, 0, 1));
    }
    CanonicalForm div_e;
    for (int i = 0; i < 3; ++i)
    {
        Key k;
        k.field = Symbol::field(FieldKind::E, i).differentiated(i);
        div_e.add(k, 1);
    }
    CanonicalForm const darwin
        = -div_e.scaled(param_monomial(1, -1, 0, 0, 1), Slot::beta());
    CanonicalForm const spin_orbit
        = Scalar(2)
          * sigma_dot(sym_cross(FieldKind::E, opts))
                .scaled(param_monomial(0, -1, 0, 0, 1), Slot::beta());
    return apply_options(darwin + spin_orbit, opts);
}

CanonicalForm omega(Case c, AlgebraOptions const& opts)
{
    return pi_squared(opts) + omega_field_part(c, opts);
}

CanonicalForm omega_power(Case c, int n, AlgebraOptions const& opts)
{
    return power_of(omega(c, opts), c == Case::I ? tag_omega_i : tag_omega_ii,
                     n, opts);
}

CanonicalForm omega_power(Case c, int n)
{
    return omega_power(c, n, case_options(c));
}

CanonicalForm omega_power_closed_form(Case c, int n, AlgebraOptions const& opts)
{
    if (n < 0)
    {
        throw InputError("negative operator power");
    }
    CanonicalForm out = pi_squared_power(n, opts);
    if (n > 0)
    {
        out += Scalar(n) * weyl_order(omega_field_part(c, opts), n - 1, opts);
    }
    return out;
}

CanonicalForm series_sqrt_expand(Case c, int order, AlgebraOptions const& opts)
{
    if (order < 0)
    {
        throw InputError("series order must be non-negative");
    }
    mpq_class const half(1, 2);
    CanonicalForm out;
    for (int n = 0; n <= order; ++n)
    {
        Scalar const coef(binomial(half, n));
        out += coef
               * omega_power(c, n, opts)
                     .scaled(param_monomial(0, 2 - 2 * n, 1 - 2 * n),
                             Slot::beta());
    }
    return apply_options(out, opts);
}

CanonicalForm series_sqrt_expand(Case c, int order)
{
    return series_sqrt_expand(c, order, case_options(c));
}

}  // namespace spinfw::opalg
