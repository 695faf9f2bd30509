#include <doctest.h>

#include <random>

#include "spinfw/core/particle.hpp"
#include "spinfw/lorentz/lorentz.hpp"
#include "support.hpp"

using namespace spinfw;
using namespace spinfw::lorentz;

namespace
{

// Textbook pure-boost field transformation, Gaussian units.
std::pair<ThreeVector, ThreeVector> reference_fields(ThreeVector const& e,
                                                     ThreeVector const& b,
                                                     ThreeVector const& beta)
{
    double const g = 1 / std::sqrt(1 - beta.squaredNorm());
    double const k = g * g / (g + 1);
    ThreeVector const ep = g * (e + beta.cross(b)) - k * beta.dot(e) * beta;
    ThreeVector const bp = g * (b - beta.cross(e)) - k * beta.dot(b) * beta;
    return {ep, bp};
}

ThreeVector random_beta(std::mt19937_64& rng)
{
    ThreeVector b = test::random_vector(rng);
    return b.normalized() * std::uniform_real_distribution<double>(0.05, 0.95)(rng);
}

}  // namespace

TEST_CASE("boost matrix preserves the metric and inverts with -beta")
{
    std::mt19937_64 rng(11);
    for (int n = 0; n < 50; ++n)
    {
        ThreeVector const beta = random_beta(rng);
        Matrix4 const l = boost_matrix(beta);
        CHECK((l.transpose() * metric() * l - metric()).norm() < 1e-12);
        CHECK((boost_matrix(-beta) * l - Matrix4::Identity()).norm() < 1e-12);
        CHECK(l(0, 0) == doctest::Approx(lorentz_gamma(beta)));
    }
    CHECK_THROWS(boost_matrix(ThreeVector{1, 0, 0}));
}

TEST_CASE("field transformation matches the reference formula and the tensor route")
{
    std::mt19937_64 rng(12);
    for (int n = 0; n < 50; ++n)
    {
        ThreeVector const e = test::random_vector(rng);
        ThreeVector const b = test::random_vector(rng);
        ThreeVector const beta = random_beta(rng);
        auto const [ep, bp] = boost_fields(e, b, beta);
        auto const [er, br] = reference_fields(e, b, beta);
        CHECK((ep - er).norm() < 1e-11 * (1 + er.norm()));
        CHECK((bp - br).norm() < 1e-11 * (1 + br.norm()));

        Matrix4 const l = boost_matrix(beta);
        auto const [et, bt] = fields_from_tensor(l * field_tensor(e, b) * l.transpose());
        CHECK((et - er).norm() < 1e-11 * (1 + er.norm()));
        CHECK((bt - br).norm() < 1e-11 * (1 + br.norm()));

        // invariants
        CHECK((ep.squaredNorm() - bp.squaredNorm())
              == doctest::Approx(e.squaredNorm() - b.squaredNorm()).epsilon(1e-9));
        CHECK(ep.dot(bp) == doctest::Approx(e.dot(b)).epsilon(1e-9));
    }
}

TEST_CASE("field tensor round trip")
{
    ThreeVector const e{0.1, -0.4, 2};
    ThreeVector const b{1.5, 0.2, -0.3};
    auto const [e2, b2] = fields_from_tensor(field_tensor(e, b));
    CHECK((e2 - e).norm() < 1e-15);
    CHECK((b2 - b).norm() < 1e-15);
    Matrix4 const f = field_tensor(e, b);
    CHECK((f + f.transpose()).norm() < 1e-15);
}

TEST_CASE("four vectors boost like the matrix and keep their norm")
{
    std::mt19937_64 rng(13);
    FourVector const v{2, 0.3, -0.5, 1};
    ThreeVector const beta = random_beta(rng);
    FourVector const w = boost_four_vector(v, beta);
    CHECK((w - boost_matrix(beta) * v).norm() < 1e-12);
    CHECK(minkowski_dot(w, w) == doctest::Approx(minkowski_dot(v, v)));
}

TEST_CASE("Levi-Civita symbol")
{
    CHECK(levi_civita4(0, 1, 2, 3) == 1);
    CHECK(levi_civita4(1, 0, 2, 3) == -1);
    CHECK(levi_civita4(1, 2, 3, 0) == -1);
    CHECK(levi_civita4(0, 0, 2, 3) == 0);
}

TEST_CASE("spin tensor and spin vector round trip")
{
    auto const params = ParticleParams::from_anomalous_moment(1, 1, 0.3);
    std::mt19937_64 rng(14);
    for (int n = 0; n < 20; ++n)
    {
        ThreeVector const pi = test::random_vector(rng, 2);
        ThreeVector const s = test::random_vector(rng).normalized() * 0.5;
        FourVector const u = four_velocity_pi(pi, params);
        CHECK(minkowski_dot(u, u) == doctest::Approx(params.c() * params.c()));
        FourVector const sl = spin_four_vector_lab(s, pi, params);
        CHECK(std::abs(minkowski_dot(sl, u)) < 1e-12);
        // a rest-frame spin keeps its length
        CHECK(-minkowski_dot(sl, sl) == doctest::Approx(s.squaredNorm()));
        SpinTensor const st = spin_tensor_from_vector(sl, u, params.c());
        CHECK((st + st.transpose()).norm() < 1e-14);
        CHECK((spin_vector_from_tensor(st, u, params.c()) - sl).norm() < 1e-12);
    }
}

TEST_CASE("BMT rhs keeps s orthogonal to u")
{
    auto const params = ParticleParams::from_anomalous_moment(1, 1, 0.3);
    ThreeVector const pi{0.4, -0.2, 0.1};
    FourVector const u = four_velocity_pi(pi, params);
    FourVector const s = spin_four_vector_lab({0.1, 0.3, -0.4}, pi, params);
    Matrix4 const f = field_tensor({0.2, 0, 0.1}, {0, 0.5, 1});
    FourVector const force = lorentz_force_rhs(u, f, FourVector::Zero(), params);
    CHECK(std::abs(minkowski_dot(force, u)) < 1e-12);
    FourVector const ds = bmt_rhs(s, u, f, FourVector::Zero(), params);
    // d(s.u)/dtau = ds.u + s.du = 0
    CHECK(std::abs(minkowski_dot(ds, u) + minkowski_dot(s, force)) < 1e-12);
}
