#include <doctest.h>

#include <cmath>
#include <random>

#include "spinfw/core/errors.hpp"
#include "spinfw/core/field_model.hpp"
#include "spinfw/core/fit.hpp"
#include "spinfw/core/particle.hpp"
#include "support.hpp"

using namespace spinfw;

TEST_CASE("gyromagnetic ratio from the anomalous moment")
{
    auto const p = ParticleParams::from_anomalous_moment(2, 3, 0.25, 0.5, 4);
    CHECK(p.gamma_m() == doctest::Approx(3.0 / 8 + 2 * 0.25 / 0.5));
    CHECK(p.dirac_gyromagnetic() == doctest::Approx(3.0 / 8));
    CHECK(p.anomalous_gyromagnetic() == doctest::Approx(1.0));
    CHECK(p.mu() == doctest::Approx(p.gamma_m() * 0.5 / 2));

    auto const q = ParticleParams::from_gyromagnetic_ratio(2, 3, p.gamma_m(), 0.5, 4);
    CHECK(q.mu_prime() == doctest::Approx(0.25));
}

TEST_CASE("nonpositive mass, hbar or c is rejected")
{
    CHECK_THROWS_AS(ParticleParams::dirac(0), ConfigurationError);
    CHECK_THROWS_AS(ParticleParams::dirac(1, 1, -1), ConfigurationError);
    CHECK_THROWS_AS(ParticleParams::dirac(1, 1, 1, NAN), ConfigurationError);
}

TEST_CASE("gamma_pi and v_pi")
{
    auto const p = ParticleParams::dirac(2, 1, 1, 3);
    ThreeVector const pi{3, 4, 0};
    double const g = std::sqrt(1 + 25.0 / 36);
    CHECK(gamma_pi(pi, p) == doctest::Approx(g));
    CHECK((v_pi(pi, p) - pi / (g * 2)).norm() < 1e-14);
    CHECK(v_pi(ThreeVector{1e6, 0, 0}, p).norm() < 3);
}

namespace
{

// Central differences of every field quantity, used as the oracle for the
// analytic gradients.
void check_gradients(FieldModel const& model, ThreeVector const& x)
{
    double const h = 1e-5;
    auto const s = sample_field(model, x);
    for (int k = 0; k < 3; ++k)
    {
        ThreeVector dx = ThreeVector::Zero();
        dx[k] = h;
        auto const sp = sample_field(model, x + dx);
        auto const sm = sample_field(model, x - dx);
        ThreeVector const db = (sp.b - sm.b) / (2 * h);
        ThreeVector const de = (sp.e - sm.e) / (2 * h);
        ThreeVector const da = (sp.a - sm.a) / (2 * h);
        CHECK((s.grad_phi[k] - (sp.phi - sm.phi) / (2 * h)) == doctest::Approx(0).epsilon(1e-6));
        for (int i = 0; i < 3; ++i)
        {
            CHECK(std::abs(s.grad_b(i, k) - db[i]) < 1e-6);
            CHECK(std::abs(s.grad_e(i, k) - de[i]) < 1e-6);
            CHECK(std::abs(s.jac_a(i, k) - da[i]) < 1e-6);
        }
    }
    // potentials reproduce the fields
    CHECK((s.e + s.grad_phi).norm() < 1e-10);
    ThreeVector const curl{s.jac_a(2, 1) - s.jac_a(1, 2), s.jac_a(0, 2) - s.jac_a(2, 0),
                           s.jac_a(1, 0) - s.jac_a(0, 1)};
    CHECK((curl - s.b).norm() < 1e-10);
    CHECK(std::abs(s.grad_b.trace()) < 1e-12);
    CHECK(s.div_e == doctest::Approx(s.grad_e.trace()));
}

}  // namespace

TEST_CASE("field models: gradients, potentials and Maxwell constraints")
{
    std::mt19937_64 rng(7);
    Superposition mix;
    mix.parts = {UniformField{{0.1, 0, 0.2}, {0, 0.3, 1}}, SternGerlachField{1, 0.4},
                 SinusoidalElectrostatic{0.2, 3}, SinusoidalMagnetostatic{0.1, 2}};
    for (FieldModel const& model :
         {FieldModel(UniformField{{0.1, -0.2, 0.3}, {0.5, 0, 1}}),
          FieldModel(SternGerlachField{1, 0.5}), FieldModel(SinusoidalElectrostatic{0.3, 2}),
          FieldModel(SinusoidalMagnetostatic{0.2, 1.5}), FieldModel(mix)})
    {
        CAPTURE(model.kind());
        for (int n = 0; n < 5; ++n)
        {
            check_gradients(model, test::random_vector(rng, 2));
        }
    }
}

TEST_CASE("superposition adds samples")
{
    ThreeVector const x{0.3, -0.1, 0.7};
    FieldModel const a = SternGerlachField{1, 0.5};
    FieldModel const b = SinusoidalElectrostatic{0.3, 2};
    auto const sum = sample_field(Superposition{{a, b}}, x);
    auto const sa = sample_field(a, x);
    auto const sb = sample_field(b, x);
    CHECK((sum.b - sa.b - sb.b).norm() < 1e-15);
    CHECK((sum.e - sa.e - sb.e).norm() < 1e-15);
    CHECK(sum.phi == doctest::Approx(sa.phi + sb.phi));
}

TEST_CASE("log-log slope")
{
    std::vector<double> x{1e-1, 1e-2, 1e-3};
    std::vector<double> y;
    for (double v : x)
    {
        y.push_back(5 * v * v);
    }
    CHECK(log_log_slope(x, y) == doctest::Approx(2).epsilon(1e-12));
    CHECK_THROWS(log_log_slope({1, 2}, {1}));
}
