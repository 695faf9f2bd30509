#include <doctest.h>

#include <complex>
#include <random>

#include "spinfw/core/errors.hpp"
#include "spinfw/opalg/canonical.hpp"
#include "spinfw/opalg/ordering.hpp"
#include "spinfw/opalg/printer.hpp"
#include "spinfw/opalg/rewrite.hpp"
#include "spinfw/opalg/verify.hpp"

using namespace spinfw;
using namespace spinfw::opalg;

namespace doctest
{
template <>
struct StringMaker<CanonicalForm>
{
    static String convert(CanonicalForm const& a) { return to_text(a).c_str(); }
};
}  // namespace doctest

namespace
{

using C = std::complex<double>;

// Standard Dirac representation, built here rather than taken from the library.
Eigen::Matrix2cd pauli(int k)
{
    Eigen::Matrix2cd m;
    switch (k)
    {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, C(0, -1), C(0, 1), 0; break;
    case 3: m << 1, 0, 0, -1; break;
    default: m.setIdentity();
    }
    return m;
}

Eigen::Matrix4cd dirac_beta()
{
    return Eigen::Vector4cd(1, 1, -1, -1).asDiagonal();
}

Eigen::Matrix4cd dirac_alpha(int i)
{
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m.topRightCorner<2, 2>() = pauli(i + 1);
    m.bottomLeftCorner<2, 2>() = pauli(i + 1);
    return m;
}

Eigen::Matrix4cd dirac_sigma(int i)
{
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m.topLeftCorner<2, 2>() = pauli(i + 1);
    m.bottomRightCorner<2, 2>() = pauli(i + 1);
    return m;
}

C i_power(int k)
{
    static C const table[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return table[((k % 4) + 4) % 4];
}

AlgebraOptions unlimited()
{
    AlgebraOptions o;
    o.max_derivative_order = -1;
    return o;
}

Key field_key(FieldKind k, int comp, Params p = {}, Slot s = {})
{
    Key key;
    key.params = p;
    key.slot = s;
    key.field = Symbol::field(k, comp);
    return key;
}

// Random word of pi letters and field symbols (with derivatives), random
// slot, parameters and rational coefficient.
OpExpr random_expression(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> terms(1, 3), length(1, 5), letter(0, 8),
        comp(0, 2), der(0, 1), slot(0, 3), coef(-5, 5), power(-1, 1);
    OpExpr out;
    int const n = terms(rng);
    for (int t = 0; t < n; ++t)
    {
        Term term;
        int const c = coef(rng);
        term.coef = Scalar(mpq_class(c == 0 ? 1 : c, 3), mpq_class(coef(rng), 2));
        term.slot = Slot{static_cast<std::uint8_t>(slot(rng)),
                         static_cast<std::uint8_t>(slot(rng))};
        term.params = param_monomial(power(rng), power(rng), 0, power(rng));
        int const len = length(rng);
        for (int l = 0; l < len; ++l)
        {
            int const kind = letter(rng);
            if (kind < 6)
            {
                term.word.push_back(Symbol::pi(comp(rng)));
            }
            else
            {
                Symbol f = Symbol::field(kind == 6 ? FieldKind::E : FieldKind::B, comp(rng));
                f.d[comp(rng)] = static_cast<std::uint8_t>(der(rng));
                term.word.push_back(f);
            }
        }
        out.add(std::move(term));
    }
    return out;
}

CanonicalForm random_form(std::mt19937_64& rng)
{
    return canonicalize(random_expression(rng), unlimited());
}

}  // namespace

TEST_CASE("slot matrices are the Dirac matrices")
{
    CHECK((slot_matrix(Slot::beta()) - dirac_beta()).norm() < 1e-15);
    for (int i = 0; i < 3; ++i)
    {
        CHECK((slot_matrix(Slot::alpha_i(i)) - dirac_alpha(i)).norm() < 1e-15);
        CHECK((slot_matrix(Slot::sigma_i(i)) - dirac_sigma(i)).norm() < 1e-15);
    }
}

TEST_CASE("slot products match matrix products")
{
    for (int a = 0; a < 16; ++a)
    {
        for (int b = 0; b < 16; ++b)
        {
            Slot const sa{static_cast<std::uint8_t>(a / 4), static_cast<std::uint8_t>(a % 4)};
            Slot const sb{static_cast<std::uint8_t>(b / 4), static_cast<std::uint8_t>(b % 4)};
            auto const [k, sc] = slot_product(sa, sb);
            Eigen::Matrix4cd const lhs = slot_matrix(sa) * slot_matrix(sb);
            CHECK((lhs - i_power(k) * slot_matrix(sc)).norm() < 1e-14);
        }
    }
}

TEST_CASE("exact rational scalars")
{
    Scalar const a = Scalar::fraction(1, 3);
    Scalar const b(mpq_class(1, 6), mpq_class(-1, 2));
    CHECK(a + a + a == Scalar(1));
    CHECK((a * b) / b == a);
    CHECK(Scalar::imaginary_unit().times_i_power(3) == Scalar(1));
    CHECK(b.conj() == Scalar(mpq_class(1, 6), mpq_class(1, 2)));
    CHECK(binomial(mpq_class(1, 2), 2) == mpq_class(-1, 8));
    CHECK(binomial_int(6, 3) == 20);
}

TEST_CASE("pi commutator gives the magnetic field")
{
    auto const pi = pi_vector();
    CanonicalForm const comm = canonicalize(pi[0] * pi[1] - pi[1] * pi[0]);
    // [pi_1, pi_2] = i hbar e / c B_3
    CanonicalForm const expected
        = CanonicalForm::monomial(field_key(FieldKind::B, 2, param_monomial(1, -1, 0, 1)),
                                  Scalar::imaginary_unit());
    CHECK(comm == expected);
}

TEST_CASE("pi past a field produces its derivative")
{
    OpExpr const e1 = OpExpr::field(FieldKind::E, 0);
    CanonicalForm const comm = canonicalize(OpExpr::pi(1) * e1 - e1 * OpExpr::pi(1));
    Key k = field_key(FieldKind::E, 0, param_monomial(1, 0, 0));
    k.field.d[1] = 1;
    // [pi_2, E_1] = -i hbar d_2 E_1
    CHECK(comm == CanonicalForm::monomial(k, -Scalar::imaginary_unit()));
}

TEST_CASE("neutral, uniform and commuting options")
{
    auto const pi = pi_vector();
    OpExpr const comm = pi[0] * pi[1] - pi[1] * pi[0];
    AlgebraOptions neutral;
    neutral.neutral = true;
    CHECK(canonicalize(comm, neutral).is_zero());
    AlgebraOptions commuting;
    commuting.commuting = true;
    CHECK(canonicalize(comm, commuting).is_zero());
    AlgebraOptions uniform;
    uniform.uniform_fields = true;
    OpExpr const b = OpExpr::field(FieldKind::B, 1);
    CHECK(canonicalize(pi[2] * b - b * pi[2], uniform).is_zero());
}

TEST_CASE("multiplication is associative")
{
    std::mt19937_64 rng(31);
    for (int n = 0; n < 100; ++n)
    {
        CanonicalForm const a = random_form(rng);
        CanonicalForm const b = random_form(rng);
        CanonicalForm const c = random_form(rng);
        auto const o = unlimited();
        CHECK(multiply(multiply(a, b, o), c, o) == multiply(a, multiply(b, c, o), o));
    }
}

TEST_CASE("normal form is confluent: every rewrite order reaches the fast path")
{
    std::mt19937_64 rng(32);
    std::uniform_int_distribution<int> choice(0, 3);
    std::uint64_t steps = 0;
    for (int n = 0; n < 1000; ++n)
    {
        OpExpr const x = random_expression(rng);
        AlgebraOptions opts = unlimited();
        switch (choice(rng))
        {
        case 1: opts.neutral = true; break;
        case 2: opts.uniform_fields = true; break;
        case 3: opts.commuting = true; break;
        default: break;
        }
        CanonicalForm const fast = canonicalize(x, opts);
        RewriteStats stats;
        CHECK(rewrite_to_normal_form(x, opts, RewriteStrategy::Leftmost, 0, &stats) == fast);
        CHECK(rewrite_to_normal_form(x, opts, RewriteStrategy::Rightmost) == fast);
        CHECK(rewrite_to_normal_form(x, opts, RewriteStrategy::Random, n) == fast);
        steps += stats.steps;
    }
    CHECK(steps > 0);
}

TEST_CASE("to_expr round trip")
{
    std::mt19937_64 rng(33);
    for (int n = 0; n < 50; ++n)
    {
        CanonicalForm const a = random_form(rng);
        CHECK(canonicalize(to_expr(a), unlimited()) == a);
    }
}

TEST_CASE("shadow evaluation is linear and respects slot products")
{
    std::mt19937_64 rng(34);
    std::map<Param, double> const values{{Param::Hbar, 0.7}, {Param::C, 1.3},
                                         {Param::M, 2}, {Param::E, -0.4},
                                         {Param::MuPrime, 0.25}};
    for (int n = 0; n < 50; ++n)
    {
        CanonicalForm const a = random_form(rng);
        CanonicalForm const b = random_form(rng);
        auto const sa = shadow_evaluate(a, values);
        auto const sb = shadow_evaluate(b, values);
        auto const sum = shadow_evaluate(a + b, values);
        for (auto const& [name, m] : sum)
        {
            Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
            if (auto it = sa.find(name); it != sa.end())
            {
                expected += it->second;
            }
            if (auto it = sb.find(name); it != sb.end())
            {
                expected += it->second;
            }
            CHECK((m - expected).norm() < 1e-12 * (1 + expected.norm()));
        }
    }
    // operator-free forms multiply as 4x4 matrices
    for (int n = 0; n < 20; ++n)
    {
        std::uniform_int_distribution<int> s(0, 3);
        auto slot_form = [&] {
            Key k;
            k.slot = Slot{static_cast<std::uint8_t>(s(rng)), static_cast<std::uint8_t>(s(rng))};
            k.params = param_monomial(s(rng) - 1, 0, 1);
            return CanonicalForm::monomial(k, Scalar(mpq_class(s(rng) + 1, 2), 1));
        };
        CanonicalForm const a = slot_form();
        CanonicalForm const b = slot_form();
        auto const prod = shadow_evaluate(multiply(a, b), values);
        Eigen::Matrix4cd const lhs
            = shadow_evaluate(a, values).begin()->second * shadow_evaluate(b, values).begin()->second;
        Eigen::Matrix4cd rhs = Eigen::Matrix4cd::Zero();
        if (!prod.empty())
        {
            rhs = prod.begin()->second;
        }
        CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("Pauli identity: (sigma.pi)^2 = pi^2 - (hbar e / c) sigma.B")
{
    CHECK(pauli_identity_check().ok());
    VectorForm const pi = pi_vector_form();
    CanonicalForm const sp = sigma_dot(pi);
    CanonicalForm const lhs = multiply(sp, sp);
    CanonicalForm const rhs = pi_squared_power(1)
                              - multiply(CanonicalForm::scalar(1, param_monomial(1, -1, 0, 1)),
                                         sigma_dot(field_vector_form(FieldKind::B)));
    CHECK(lhs - rhs == CanonicalForm{});
}

TEST_CASE("Weyl ordering agrees with the symmetric average")
{
    CanonicalForm const x = canonicalize(OpExpr::field(FieldKind::E, 0)
                                         + OpExpr::slot(Slot::beta()) * OpExpr::field(FieldKind::B, 2));
    auto const o = unlimited();
    for (int n = 0; n <= 3; ++n)
    {
        CanonicalForm avg;
        for (int l = 0; l <= n; ++l)
        {
            avg += multiply(multiply(pi_squared_power(l, o), x, o), pi_squared_power(n - l, o), o);
        }
        avg = Scalar::fraction(1, n + 1) * avg;
        CHECK(weyl_order(x, n, o) == avg);
    }
    CHECK_THROWS_AS(weyl_order(x, -1), InputError);
    CHECK_THROWS_AS(weyl_order(pi_squared_power(1), 1), InputError);
}

TEST_CASE("Omega powers: repeated product equals the closed form")
{
    for (Case c : {Case::I, Case::II})
    {
        AlgebraOptions const o = case_options(c);
        for (int n = 0; n <= 4; ++n)
        {
            CAPTURE(n);
            CHECK(omega_power(c, n, o) == omega_power_closed_form(c, n, o));
        }
    }
}

TEST_CASE("series expansion equals the closed form in both cases")
{
    for (Case c : {Case::I, Case::II})
    {
        auto const v = verify_case(c, 4);
        CHECK(v.zero);
        CHECK(v.discrepancy.is_zero());
        CHECK(v.series_terms > 0);
    }
    CHECK_THROWS_AS(series_sqrt_expand(Case::I, -1), InputError);
}

TEST_CASE("low-order matchup with the classical Hamiltonian")
{
    CHECK(verify_matchup(2).ok());
}

TEST_CASE("Darwin coefficient anchors")
{
    CanonicalForm const k = darwin_coefficient_symbolic();
    std::map<Param, mpq_class> v{{Param::Hbar, mpq_class(3, 2)}, {Param::C, 2},
                                 {Param::M, 5}, {Param::E, mpq_class(7, 3)},
                                 {Param::MuPrime, 0}};
    // Dirac particle: hbar^2 e / (8 m^2 c^2)
    mpq_class const dirac = mpq_class(9, 4) * mpq_class(7, 3) / (8 * 25 * 4);
    CHECK(evaluate_parameters(k, v) == Scalar(dirac));
    // neutral particle with anomalous moment: -hbar mu' / (2 m c)
    v[Param::E] = 0;
    v[Param::MuPrime] = mpq_class(1, 4);
    mpq_class const neutral = -mpq_class(3, 2) * mpq_class(1, 4) / (2 * 5 * 2);
    CHECK(evaluate_parameters(k, v) == Scalar(neutral));
    CHECK_THROWS_AS(evaluate_parameters(pi_squared_power(1), v), InputError);
}

TEST_CASE("printer")
{
    CanonicalForm const b = CanonicalForm::monomial(
        field_key(FieldKind::B, 2, param_monomial(1, -1, 0, 1)), Scalar::imaginary_unit());
    std::string const text = to_text(b);
    CHECK(text.find("B") != std::string::npos);
    CHECK(to_text(CanonicalForm{}).starts_with("0"));
    CHECK(to_json(b).is_array());
}
