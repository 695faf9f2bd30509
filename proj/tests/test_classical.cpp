#include <doctest.h>

#include <random>

#include "spinfw/classical/diagnostics.hpp"
#include "spinfw/classical/hamiltonian.hpp"
#include "spinfw/classical/integrator.hpp"
#include "spinfw/core/errors.hpp"
#include "spinfw/lorentz/lorentz.hpp"
#include "support.hpp"

using namespace spinfw;
using namespace spinfw::classical;

namespace
{

auto const params = ParticleParams::from_anomalous_moment(1, 1, 0.3);

FieldModel mixed_field()
{
    return Superposition{{UniformField{{0.01, 0, 0.02}, {0, 0.01, 0.05}},
                          SternGerlachField{0.05, 0.02}, SinusoidalElectrostatic{0.03, 5},
                          SinusoidalMagnetostatic{0.02, 4}}};
}

}  // namespace

TEST_CASE("precession vector at rest is gamma_m B")
{
    ThreeVector const b{0.1, -0.3, 2};
    ThreeVector const e{0.5, 0.2, 0};
    ThreeVector const w = precession_vector(ThreeVector::Zero(), e, b, params);
    CHECK((w - params.gamma_m() * b).norm() < 1e-14);
}

TEST_CASE("precession vector agrees with the low-speed form to second order")
{
    ThreeVector const b{0.1, -0.3, 1};
    ThreeVector const e{0.5, 0.2, -0.4};
    ThreeVector const dir{0.3, 0.8, -0.5};
    double previous = 0;
    for (double speed : {1e-2, 5e-3})
    {
        ThreeVector const pi = speed * dir;
        ThreeVector const beta = v_pi(pi, params) / params.c();
        double const d = (precession_vector(pi, e, b, params)
                          - precession_vector_low_speed(beta, e, b, params))
                             .norm();
        CHECK(d < 10 * speed * speed);
        if (previous > 0)
        {
            // error falls at least quadratically
            CHECK(previous / d > 3.9);
        }
        previous = d;
    }
}

TEST_CASE("analytic Hamiltonian gradient against central differences")
{
    std::mt19937_64 rng(21);
    FieldModel const model = mixed_field();
    double const h = 1e-6;
    for (int n = 0; n < 20; ++n)
    {
        PhaseState s;
        s.x = test::random_vector(rng, 1);
        s.p = test::random_vector(rng, 0.5);
        s.s = test::random_vector(rng, 0.5);
        auto const g = grad_h(s, model, params);
        for (int k = 0; k < 3; ++k)
        {
            PhaseState a = s, b = s;
            a.x[k] += h;
            b.x[k] -= h;
            double const fx = (h_total(a, model, params) - h_total(b, model, params)) / (2 * h);
            a = s;
            b = s;
            a.p[k] += h;
            b.p[k] -= h;
            double const fp = (h_total(a, model, params) - h_total(b, model, params)) / (2 * h);
            CHECK(std::abs(g.dh_dx[k] - fx) < 1e-8);
            CHECK(std::abs(g.dh_dp[k] - fp) < 1e-8);
        }
    }
}

TEST_CASE("equations of motion are Hamilton's equations")
{
    PhaseState s;
    s.x = {0.1, 0.2, -0.1};
    s.p = {0.3, 0, 0.1};
    s.s = {0.2, 0.4, 0.1};
    FieldModel const model = mixed_field();
    auto const g = grad_h(s, model, params);
    auto const r = eom_rhs(s, model, params);
    CHECK((r.dx - g.dh_dp).norm() < 1e-14);
    CHECK((r.dp + g.dh_dx).norm() < 1e-14);
    auto const f = sample_field(model, s.x);
    ThreeVector const w
        = precession_vector(kinematic_momentum(s.p, f.a, params), f.e, f.b, params);
    CHECK(std::abs(r.ds.dot(s.s)) < 1e-14);
    CHECK(r.ds.norm() == doctest::Approx(w.cross(s.s).norm()));
}

TEST_CASE("RK4 and RKF45 agree and conserve the invariants")
{
    PhaseState s0;
    s0.p = {0.05, 0.02, 0.01};
    s0.s = {0.5, 0, 0};
    FieldModel const model = mixed_field();
    IntegratorSpec rk4;
    rk4.step = 1e-2;
    rk4.renormalize_spin = false;
    IntegratorSpec rkf = rk4;
    rkf.method = IntegratorMethod::RKF45;
    rkf.tolerance = 1e-12;
    auto const a = integrate(s0, model, params, rk4, 20);
    auto const b = integrate(s0, model, params, rkf, 20);
    auto const& ea = a.samples.back();
    auto const& eb = b.samples.back();
    CHECK(ea.t == doctest::Approx(20));
    CHECK(eb.t == doctest::Approx(20));
    CHECK((ea.state.x - eb.state.x).norm() < 1e-7);
    CHECK((ea.state.s - eb.state.s).norm() < 1e-7);
    double const h0 = h_total(s0, model, params);
    CHECK(test::relative(ea.h_total, h0) < 1e-9);
    CHECK(std::abs(ea.s_norm - 0.5) < 1e-9);
}

TEST_CASE("integrator spec validation")
{
    IntegratorSpec spec;
    spec.step = 0;
    CHECK_THROWS_AS(spec.validate(), ConfigurationError);
    spec = {};
    spec.tolerance = -1;
    CHECK_NOTHROW(spec.validate());  // unused by RK4
    spec.method = IntegratorMethod::RKF45;
    CHECK_THROWS_AS(spec.validate(), ConfigurationError);
    spec = {};
    spec.sample_stride = 0;
    CHECK_THROWS_AS(spec.validate(), ConfigurationError);
}

TEST_CASE("boost covariance residual vanishes without a boost")
{
    ThreeVector const r = boost_covariance_residual({0.3, 0.1, 0}, {0, 0.01, 0},
                                                    {0, 0, 0.02}, ThreeVector::Zero(), params);
    CHECK(r.norm() < 1e-15);
}

TEST_CASE("classical Darwin term is linear in its coefficient")
{
    PhaseState s;
    s.x = {0.1, 0, 0};
    s.p = {0.01, 0, 0};
    FieldModel const model = SinusoidalElectrostatic{0.1, 2};
    double const one = darwin_classical_hd(s, model, params, 1);
    CHECK(one != 0);
    CHECK(darwin_classical_hd(s, model, params, 2.5) == doctest::Approx(2.5 * one));
}
