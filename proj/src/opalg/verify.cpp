#include "spinfw/opalg/verify.hpp"

#include <set>

#include "spinfw/core/errors.hpp"
#include "spinfw/opalg/printer.hpp"

namespace spinfw::opalg
{

namespace
{

CanonicalForm beta_form()
{
    Key k;
    k.slot = Slot::beta();
    return CanonicalForm::monomial(k);
}

CanonicalForm div_e_form()
{
    CanonicalForm out;
    for (int i = 0; i < 3; ++i)
    {
        Key k;
        k.field = Symbol::field(FieldKind::E, i).differentiated(i);
        out.add(k, 1);
    }
    return out;
}

// beta m c^2 sum_{n<=N} C(1/2, n) pi^{2n} / (mc)^{2n}
CanonicalForm kinetic_series(int order, AlgebraOptions const& opts)
{
    mpq_class const half(1, 2);
    CanonicalForm out;
    for (int n = 0; n <= order; ++n)
    {
        out += Scalar(binomial(half, n))
               * pi_squared_power(n, opts).scaled(
                   param_monomial(0, 2 - 2 * n, 1 - 2 * n), Slot::beta());
    }
    return out;
}

// sum_{k<N} C(-1/2, k) (X pi^{2k})_W / (mc)^{2k}, the Weyl-ordered X / gamma_pi.
CanonicalForm inverse_gamma_series(CanonicalForm const& x, int order,
                                   AlgebraOptions const& opts)
{
    mpq_class const minus_half(-1, 2);
    CanonicalForm out;
    for (int k = 0; k < order; ++k)
    {
        out += Scalar(binomial(minus_half, k))
               * weyl_order(x, k, opts).scaled(param_monomial(0, -2 * k, -2 * k));
    }
    return out;
}

// Sparse Gaussian elimination over exact complex rationals.
class SpanReducer
{
  public:
    // Reduces v against the current basis; adds it when independent.
    void insert(CanonicalForm v)
    {
        reduce(v);
        if (v.is_zero())
        {
            return;
        }
        Key const pivot = v.sorted().front().first;
        Scalar const inv = Scalar(1) / v.coefficient(pivot);
        v = inv * v;
        // Keep the basis fully reduced on pivots.
        for (auto& [p, b] : basis_)
        {
            Scalar const c = b.coefficient(pivot);
            if (!c.is_zero())
            {
                b -= c * v;
            }
        }
        basis_.emplace_back(pivot, std::move(v));
    }

    void reduce(CanonicalForm& v) const
    {
        for (auto const& [p, b] : basis_)
        {
            Scalar const c = v.coefficient(p);
            if (!c.is_zero())
            {
                v -= c * b;
            }
        }
    }

  private:
    std::vector<std::pair<Key, CanonicalForm>> basis_;
};

Key sub_hbar(Key k, int n)
{
    k.params += Params::single(Param::Hbar, -n);
    return k;
}

}  // namespace

CanonicalForm closed_form_expansion(Case c, int order, AlgebraOptions const& opts)
{
    if (order < 0)
    {
        throw InputError("series order must be non-negative");
    }
    CanonicalForm out = kinetic_series(order, opts);
    CanonicalForm const beta = beta_form();
    if (c == Case::I)
    {
        // - beta (e hbar / 2mc) (sigma.B / gamma_pi)_W
        CanonicalForm const sb = sigma_dot(field_vector_form(FieldKind::B));
        out -= Scalar::fraction(1, 2)
               * multiply(beta, inverse_gamma_series(sb, order, opts), opts)
                     .scaled(param_monomial(1, -1, -1, 1));
    }
    else
    {
        // beta [ -(mu' hbar / 2mc) beta (div E / gamma_pi)_W
        //        + (mu' / mc) beta (sigma.(pi x E)bar / gamma_pi)_W ]
        CanonicalForm const darwin
            = -Scalar::fraction(1, 2)
              * multiply(beta, inverse_gamma_series(div_e_form(), order, opts), opts)
                    .scaled(param_monomial(1, -1, -1, 0, 1));
        CanonicalForm const so
            = multiply(beta,
                       inverse_gamma_series(
                           sigma_dot(sym_cross(FieldKind::E, opts)), order, opts),
                       opts)
                  .scaled(param_monomial(0, -1, -1, 0, 1));
        out += multiply(beta, darwin + so, opts);
    }
    return apply_options(out, opts);
}

CaseVerification verify_case(Case c, int order, int max_derivative_order)
{
    if (order < 0)
    {
        throw InputError("verify_case needs N >= 0");
    }
    AlgebraOptions const opts = case_options(c, max_derivative_order);
    CaseVerification out;
    out.which = c;
    out.order = order;
    CanonicalForm const series = series_sqrt_expand(c, order, opts);
    CanonicalForm const closed = closed_form_expansion(c, order, opts);
    out.series_terms = series.size();
    out.closed_form_terms = closed.size();
    out.discrepancy = closed - series;
    out.zero = out.discrepancy.is_zero();
    return out;
}

bool in_pi_squared_reordering_span(CanonicalForm const& d,
                                   AlgebraOptions const& opts)
{
    if (d.is_zero())
    {
        return true;
    }
    // Candidate words X: one or two derivatives stripped from each monomial.
    std::set<Key> candidates;
    for (auto const& [k, c] : d.terms())
    {
        if (!k.field.is_field())
        {
            return false;
        }
        for (int j = 0; j < 3; ++j)
        {
            if (k.field.d[j] == 0)
            {
                continue;
            }
            Key x = k;
            x.field.d[j] = static_cast<std::uint8_t>(x.field.d[j] - 1);
            for (int h = 1; h <= 2; ++h)
            {
                candidates.insert(sub_hbar(x, h));
                if (x.pi[j] > 0)
                {
                    Key y = x;
                    --y.pi[j];
                    candidates.insert(sub_hbar(y, h));
                }
            }
            if (x.field.d[j] > 0)
            {
                Key z = x;
                z.field.d[j] = static_cast<std::uint8_t>(z.field.d[j] - 1);
                candidates.insert(sub_hbar(z, 1));
                candidates.insert(sub_hbar(z, 2));
            }
        }
    }

    VectorForm const pi = pi_vector_form();
    CanonicalForm const p2 = pi_squared_power(1, opts);
    SpanReducer span;
    for (Key const& x : candidates)
    {
        CanonicalForm const xf = CanonicalForm::monomial(x);
        CanonicalForm const right = multiply(xf, p2, opts);
        CanonicalForm sandwich;
        for (int j = 0; j < 3; ++j)
        {
            sandwich += multiply(multiply(pi[j], xf, opts), pi[j], opts);
        }
        span.insert(sandwich - right);
        span.insert(multiply(p2, xf, opts) - right);
    }
    CanonicalForm rest = d;
    span.reduce(rest);
    return rest.is_zero();
}

MatchupResult verify_matchup(int order)
{
    if (order < 0)
    {
        throw InputError("verify_matchup needs N >= 0");
    }
    MatchupResult out;
    AlgebraOptions const full;

    // Eight-word expansion of 4 (pi x (pi x B)bar)bar, component i.
    VectorForm const twice = sym_cross(sym_cross(FieldKind::B, full), full);
    out.expansion_identity = true;
    for (int i = 0; i < 3; ++i)
    {
        OpExpr expanded;
        auto word = [&](int sign, std::vector<Symbol> w) {
            Term t;
            t.coef = sign;
            t.word = std::move(w);
            expanded.add(std::move(t));
        };
        auto pi = [](int j) { return Symbol::pi(j); };
        auto b = [](int j) { return Symbol::field(FieldKind::B, j); };
        for (int j = 0; j < 3; ++j)
        {
            word(+1, {pi(j), pi(i), b(j)});
            word(-1, {pi(j), pi(j), b(i)});
            word(-1, {pi(j), b(i), pi(j)});
            word(+1, {pi(j), b(j), pi(i)});
            word(-1, {pi(j), b(i), pi(j)});
            word(+1, {pi(i), b(j), pi(j)});
            word(+1, {b(j), pi(i), pi(j)});
            word(-1, {b(i), pi(j), pi(j)});
        }
        if (!(canonicalize(expanded, full) == Scalar(4) * twice[i]))
        {
            out.expansion_identity = false;
        }
    }

    auto difference = [](AlgebraOptions const& opts) {
        VectorForm const lhs
            = sym_cross(sym_cross(FieldKind::B, opts), opts);
        VectorForm const dot_form = sym_dot_pipi(FieldKind::B, opts);
        VectorForm const b = field_vector_form(FieldKind::B);
        CanonicalForm const p2 = pi_squared_power(1, opts);
        VectorForm d;
        for (int i = 0; i < 3; ++i)
        {
            d[i] = lhs[i] - (dot_form[i] - multiply(p2, b[i], opts));
        }
        return d;
    };

    AlgebraOptions commuting;
    commuting.commuting = true;
    AlgebraOptions uniform;
    uniform.uniform_fields = true;
    VectorForm const dc = difference(commuting);
    VectorForm const du = difference(uniform);
    out.residual = difference(full);
    out.commuting_limit = dc[0].is_zero() && dc[1].is_zero() && dc[2].is_zero();
    out.homogeneous_strict = du[0].is_zero() && du[1].is_zero() && du[2].is_zero();

    out.reordering_equivalent = true;
    for (int k = 0; k <= order && out.reordering_equivalent; ++k)
    {
        CanonicalForm const p2k = pi_squared_power(k, full);
        for (int i = 0; i < 3; ++i)
        {
            if (!in_pi_squared_reordering_span(
                    multiply(out.residual[i], p2k, full), full))
            {
                out.reordering_equivalent = false;
                break;
            }
        }
    }
    return out;
}

CanonicalForm alpha_dot(VectorForm const& v)
{
    CanonicalForm out;
    for (int i = 0; i < 3; ++i)
    {
        out += v[i].scaled({}, Slot::alpha_i(i));
    }
    return out;
}

PauliCheck pauli_identity_check()
{
    PauliCheck out;
    Scalar const i_unit = Scalar::imaginary_unit();
    auto identity_holds = [&](VectorForm const& a, VectorForm const& b,
                              AlgebraOptions const& opts) {
        CanonicalForm const lhs = multiply(alpha_dot(a), alpha_dot(b), opts);
        CanonicalForm const rhs
            = dot(a, b, opts) + i_unit * sigma_dot(cross(a, b, opts));
        return lhs == apply_options(rhs, opts);
    };

    VectorForm const pi = pi_vector_form();
    VectorForm const b = field_vector_form(FieldKind::B);
    VectorForm const e = field_vector_form(FieldKind::E);

    AlgebraOptions const charged;
    CanonicalForm const expected
        = pi_squared_power(1, charged)
          - sigma_dot(b).scaled(param_monomial(1, -1, 0, 1));
    out.pi_pi = identity_holds(pi, pi, charged)
                && multiply(alpha_dot(pi), alpha_dot(pi), charged) == expected;

    AlgebraOptions commuting;
    commuting.commuting = true;
    VectorForm const pp = cross(pi, pi, commuting);
    out.commuting_symbols = identity_holds(pi, e, commuting)
                            && identity_holds(pi, b, commuting)
                            && pp[0].is_zero() && pp[1].is_zero()
                            && pp[2].is_zero();

    AlgebraOptions neutral;
    neutral.neutral = true;
    CanonicalForm const commutator = dot(pi, e, neutral) - dot(e, pi, neutral);
    CanonicalForm const div_e
        = -i_unit * div_e_form().scaled(Params::single(Param::Hbar));
    out.pi_e_reduction = identity_holds(pi, e, neutral) && commutator == div_e;

    CanonicalForm const odd_i = alpha_dot(pi).scaled(Params::single(Param::C));
    out.odd_square_case_i
        = multiply(odd_i, odd_i, charged)
          == omega(Case::I, charged).scaled(Params::single(Param::C, 2));

    CanonicalForm const odd_ii
        = alpha_dot(pi).scaled(Params::single(Param::C))
          + i_unit
                * multiply(beta_form(), alpha_dot(e), neutral)
                      .scaled(Params::single(Param::MuPrime));
    out.odd_square_case_ii
        = multiply(odd_ii, odd_ii, neutral)
          == omega(Case::II, neutral).scaled(Params::single(Param::C, 2));
    return out;
}

CanonicalForm darwin_coefficient_symbolic()
{
    CanonicalForm const gamma_m
        = CanonicalForm::scalar(1, param_monomial(0, -1, -1, 1))
          + CanonicalForm::scalar(2, param_monomial(-1, 0, 0, 0, 1));
    CanonicalForm const bracket
        = CanonicalForm::scalar(Scalar::fraction(3, 2), param_monomial(0, -1, -1, 1))
          - gamma_m;
    return multiply(CanonicalForm::scalar(Scalar::fraction(1, 4),
                                          param_monomial(2, -1, -1)),
                    bracket);
}

Scalar evaluate_parameters(CanonicalForm const& a,
                           std::map<Param, mpq_class> const& values)
{
    Scalar total;
    for (auto const& [k, c] : a.terms())
    {
        if (k.field.is_field() || k.pi_degree() != 0 || !(k.slot == Slot{}))
        {
            throw InputError("evaluate_parameters needs a pure parameter polynomial");
        }
        mpq_class v = 1;
        for (int p = 0; p < param_count; ++p)
        {
            int const n = k.params.exp[p];
            if (n == 0)
            {
                continue;
            }
            auto it = values.find(static_cast<Param>(p));
            if (it == values.end())
            {
                throw InputError("missing parameter value");
            }
            if (sgn(it->second) == 0 && n < 0)
            {
                throw InputError("negative power of a zero parameter");
            }
            for (int q = 0; q < std::abs(n); ++q)
            {
                if (n > 0)
                {
                    v *= it->second;
                }
                else
                {
                    v /= it->second;
                }
            }
        }
        total += c * Scalar(v);
    }
    return total;
}

CanonicalForm set_parameter_zero(CanonicalForm const& a, Param p)
{
    CanonicalForm out;
    for (auto const& [k, c] : a.terms())
    {
        if (k.params[p] > 0)
        {
            continue;
        }
        if (k.params[p] < 0)
        {
            throw InputError("parameter appears with negative power");
        }
        out.add(k, c);
    }
    return out;
}

Eigen::Matrix4cd slot_matrix(Slot s)
{
    using C = std::complex<double>;
    std::array<Eigen::Matrix2cd, 4> pauli;
    pauli[0] << 1, 0, 0, 1;
    pauli[1] << 0, 1, 1, 0;
    pauli[2] << 0, C(0, -1), C(0, 1), 0;
    pauli[3] << 1, 0, 0, -1;
    Eigen::Matrix2cd const& r = pauli[s.rho];
    Eigen::Matrix2cd const& q = pauli[s.sigma];
    Eigen::Matrix4cd out;
    for (int a = 0; a < 2; ++a)
    {
        for (int b = 0; b < 2; ++b)
        {
            out.block<2, 2>(2 * a, 2 * b) = r(a, b) * q;
        }
    }
    return out;
}

ShadowMap shadow_evaluate(CanonicalForm const& a,
                          std::map<Param, double> const& values)
{
    ShadowMap out;
    for (auto const& [k, c] : a.sorted())
    {
        double scale = 1;
        for (int p = 0; p < param_count; ++p)
        {
            int const n = k.params.exp[p];
            if (n == 0)
            {
                continue;
            }
            auto it = values.find(static_cast<Param>(p));
            if (it == values.end())
            {
                throw InputError("missing parameter value");
            }
            scale *= std::pow(it->second, n);
        }
        std::complex<double> const coef(c.real_value(), c.imag_value());
        Key op = k;
        op.params = {};
        op.slot = {};
        auto [it, inserted] = out.try_emplace(monomial_text(op),
                                              Eigen::Matrix4cd::Zero());
        it->second += coef * scale * slot_matrix(k.slot);
    }
    return out;
}

}  // namespace spinfw::opalg
