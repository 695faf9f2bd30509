#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "spinfw/core/errors.hpp"
#include "spinfw/opalg/verify.hpp"
#include "spinfw/qfw/correspondence.hpp"
#include "spinfw/qfw/eriksen.hpp"
#include "spinfw/qfw/experiments.hpp"
#include "spinfw/qfw/instantiate.hpp"
#include "spinfw/qfw/lattice.hpp"

using namespace spinfw;
using namespace spinfw::qfw;

namespace
{

ParticleParams params_for(Case c)
{
    return default_params(c);
}

LatticeSpec small_lattice(Case c)
{
    return c == Case::I ? LatticeSpec::with_cutoff(2, 8, 0.5, params_for(c))
                        : LatticeSpec::with_cutoff(1, 16, 0.5, params_for(c));
}

// f applied to a Hermitian matrix through its eigendecomposition.
ComplexMatrix matrix_function(ComplexMatrix const& a, double (*f)(double))
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a);
    Eigen::VectorXd v = eig.eigenvalues().unaryExpr(f);
    return eig.eigenvectors() * v.cast<std::complex<double>>().asDiagonal()
           * eig.eigenvectors().adjoint();
}

Eigen::VectorXd eigenvalues_of(ComplexMatrix const& a)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(a, Eigen::EigenvaluesOnly);
    return eig.eigenvalues();
}

}  // namespace

TEST_CASE("free lattice spectrum is +/- sqrt(m^2 c^4 + c^2 p^2)")
{
    for (Case c : {Case::I, Case::II})
    {
        ParticleParams const p = params_for(c);
        LatticeSpec const l = small_lattice(c);
        auto const h = build_hamiltonian(c, l, 0, p);
        // wavenumbers 2 pi m / L for m in (-N/2, N/2), the Nyquist mode at 0
        std::vector<double> k1;
        for (int m = -l.sites / 2 + 1; m < l.sites / 2; ++m)
        {
            k1.push_back(2 * std::numbers::pi * m / l.period);
        }
        k1.push_back(0);
        std::vector<double> expected;
        double const mc2 = p.m() * p.c() * p.c();
        auto push = [&](double k2) {
            double const energy = std::sqrt(mc2 * mc2 + p.c() * p.c() * p.hbar() * p.hbar() * k2);
            for (int s = 0; s < 2; ++s)
            {
                expected.push_back(energy);
                expected.push_back(-energy);
            }
        };
        for (double kx : k1)
        {
            if (l.dimension == 1)
            {
                push(kx * kx);
                continue;
            }
            for (double ky : k1)
            {
                push(kx * kx + ky * ky);
            }
        }
        std::sort(expected.begin(), expected.end());
        Eigen::VectorXd const got = eigenvalues_of(h.matrix);
        REQUIRE(got.size() == static_cast<Eigen::Index>(expected.size()));
        for (Eigen::Index i = 0; i < got.size(); ++i)
        {
            CHECK(std::abs(got[i] - expected[i]) < 1e-10);
        }
    }
}

TEST_CASE("lattice Hamiltonians are Hermitian with an odd perturbation")
{
    for (Case c : {Case::I, Case::II})
    {
        ParticleParams const p = params_for(c);
        auto const h = build_hamiltonian(c, small_lattice(c), 1e-2, p);
        CHECK(hermiticity_error(h.matrix) < 1e-13);
        CHECK(odd_part_error(h, p) < odd_part_tolerance);
    }
}

TEST_CASE("exact FW transform equals beta |H|")
{
    for (Case c : {Case::I, Case::II})
    {
        ParticleParams const p = params_for(c);
        auto const h = build_hamiltonian(c, small_lattice(c), 1e-2, p);
        auto const fw = eriksen_fw(h, p);
        // with an odd perturbation H^2 = m^2 c^4 + O^2, so H' = beta sqrt(H^2)
        ComplexMatrix const abs_h = matrix_function(h.matrix, [](double x) { return std::abs(x); });
        ComplexMatrix const ref = beta_matrix(h.lattice.spatial_size()) * abs_h;
        CHECK(max_abs(fw.matrix - ref) < 1e-10);
        CHECK(block_diagonality_error(fw.matrix) < 1e-12);
        Eigen::VectorXd const a = sorted_eigenvalues(fw.matrix);
        Eigen::VectorXd const b = eigenvalues_of(h.matrix);
        CHECK((a - b).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("exact FW transform refuses an even perturbation")
{
    ParticleParams const p = params_for(Case::II);
    auto h = build_hamiltonian(Case::II, small_lattice(Case::II), 1e-2, p);
    h.matrix += 0.1 * ComplexMatrix::Identity(h.matrix.rows(), h.matrix.cols());
    CHECK(odd_part_error(h, p) > odd_part_tolerance);
    CHECK_THROWS_AS(eriksen_fw(h, p), PreconditionError);
}

TEST_CASE("correspondence is exact without fields")
{
    for (Case c : {Case::I, Case::II})
    {
        CHECK(correspondence_residual(c, small_lattice(c), 0, params_for(c), {}) < 1e-11);
    }
}

TEST_CASE("Weyl kernel is the Frechet derivative of the antiderivative")
{
    ParticleParams const p = params_for(Case::I);
    auto const symbols = build_symbol_matrices(Case::I, small_lattice(Case::I), 1e-2, p);
    WeylCalculus const weyl(symbols.pi_squared, p);
    double const mc2 = std::pow(p.m() * p.c(), 2);
    ComplexMatrix const scaled = symbols.pi_squared / mc2;

    std::mt19937_64 rng(41);
    std::normal_distribution<double> n(0, 1);
    ComplexMatrix x(scaled.rows(), scaled.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
    {
        for (Eigen::Index j = 0; j < x.cols(); ++j)
        {
            x(i, j) = {n(rng), n(rng)};
        }
    }
    x = (x + x.adjoint()).eval() * 0.5;
    x /= eigenvalues_of(x).cwiseAbs().maxCoeff();

    // g = (1 + x)^(-1/2) has antiderivative G = 2 (sqrt(1 + x) - 1)
    auto big_g = [](double v) { return 2 * (std::sqrt(1 + v) - 1); };
    double const eps = 1e-4;
    ComplexMatrix const fd = (matrix_function(scaled + eps * x, +big_g)
                              - matrix_function(scaled - eps * x, +big_g))
                             / (2 * eps);
    WeylSeriesInfo info;
    ComplexMatrix const w = weyl.apply(x, inverse_gamma_series(), &info);
    CHECK(max_abs(w - fd) < 1e-7 * max_abs(fd));
    CHECK(info.terms > 1);
    CHECK(info.tail_bound < weyl_tail_tolerance);
    CHECK(weyl.spectral_radius() < 1);

    // commuting argument: the kernel reduces to g(P) X
    ComplexMatrix const id = ComplexMatrix::Identity(x.rows(), x.cols());
    ComplexMatrix const g_p
        = matrix_function(scaled, [](double v) { return 1 / std::sqrt(1 + v); });
    CHECK(max_abs(weyl.apply(id, inverse_gamma_series()) - g_p) < 1e-11);
}

TEST_CASE("Weyl series refuses a spectral radius at or above one")
{
    ParticleParams const p = params_for(Case::I);
    ComplexMatrix const big = 2 * ComplexMatrix::Identity(8, 8);
    WeylCalculus const weyl(big, p);
    CHECK_THROWS_AS(weyl.apply(big, inverse_gamma_series()), SeriesTruncationError);
}

TEST_CASE("series coefficients")
{
    CHECK(binomial_half(0) == 1);
    CHECK(binomial_half(2) == doctest::Approx(-0.125));
    CHECK(binomial_minus_half(1) == doctest::Approx(-0.5));
    CHECK(binomial_minus_half(2) == doctest::Approx(0.375));
    // 1/(g(g+1)) at x -> 0 is 1/2
    CHECK(inverse_gamma_gamma_plus_one_series()(0) == doctest::Approx(0.5));
    CHECK(inverse_gamma_plus_one_series()(0) == doctest::Approx(0.5));
}

TEST_CASE("Darwin coefficient matches the symbolic value and the Dirac limit")
{
    auto const dirac = ParticleParams::dirac(2, 3, 0.5, 1.5);
    CHECK(darwin_coefficient(dirac) == doctest::Approx(0.25 * 3 / (8 * 4 * 2.25)));
    auto const neutral = ParticleParams::from_anomalous_moment(2, 0, 0.4, 0.5, 1.5);
    CHECK(darwin_coefficient(neutral) == doctest::Approx(-0.5 * 0.4 / (2 * 2 * 1.5)));
    std::map<opalg::Param, mpq_class> const v{{opalg::Param::Hbar, mpq_class(1, 2)},
                                              {opalg::Param::C, mpq_class(3, 2)},
                                              {opalg::Param::M, 2},
                                              {opalg::Param::E, 0},
                                              {opalg::Param::MuPrime, mpq_class(2, 5)}};
    CHECK(opalg::evaluate_parameters(opalg::darwin_coefficient_symbolic(), v).real_value()
          == doctest::Approx(darwin_coefficient(neutral)));
}

TEST_CASE("parity commutes with H and H'")
{
    for (Case c : {Case::I, Case::II})
    {
        auto const r = parity_check(c, small_lattice(c), 1e-2, params_for(c));
        CHECK(r.hamiltonian < 1e-12);
        CHECK(r.transformed < 1e-12);
    }
}

TEST_CASE("lattice validation")
{
    ParticleParams const p = params_for(Case::II);
    CHECK_THROWS_AS(LatticeSpec::with_cutoff(1, 16, 0.95, p).validate(p), ConfigurationError);
    CHECK_THROWS_AS(LatticeSpec::with_cutoff(1, 15, 0.5, p).validate(p), ConfigurationError);
    CHECK_THROWS_AS(LatticeSpec::with_cutoff(3, 16, 0.5, p).validate(p), ConfigurationError);
    LatticeSpec tight = LatticeSpec::with_cutoff(1, 16, 0.5, p);
    tight.period *= 0.5;
    CHECK_THROWS_AS(tight.validate(p), ConfigurationError);
    CHECK_NOTHROW(LatticeSpec::with_cutoff(1, 16, 0.9, p).validate(p));
    CHECK_THROWS_AS(build_hamiltonian(Case::I, small_lattice(Case::II), 0, p),
                    ConfigurationError);
    CHECK_THROWS_AS(build_hamiltonian(Case::II, small_lattice(Case::II), 0,
                                      params_for(Case::I)),
                    ConfigurationError);
}

TEST_CASE("scaling experiment preconditions")
{
    ParticleParams const p = params_for(Case::II);
    LatticeSpec const l = small_lattice(Case::II);
    CHECK_THROWS_AS(residual_scaling(Case::II, l, p, {1e-2, 1e-3}, true), PreconditionError);
    CHECK_THROWS_AS(residual_scaling(Case::II, l, p, {1e-2, 1e-3, 1e-5}, true),
                    PreconditionError);
    CHECK_THROWS_AS(residual_scaling(Case::II, l, p, {1e-2, -1e-3, 1e-4}, true),
                    PreconditionError);
    CHECK_THROWS_AS(darwin_vs_classical_hd(small_lattice(Case::I), params_for(Case::I),
                                           default_lambdas(Case::II)),
                    ConfigurationError);
}

TEST_CASE("correspondence residual scales as lambda^2 with Darwin and lambda without")
{
    ParticleParams const p = params_for(Case::II);
    LatticeSpec const l = small_lattice(Case::II);
    auto const with = residual_scaling(Case::II, l, p, default_lambdas(Case::II), true);
    auto const without = residual_scaling(Case::II, l, p, default_lambdas(Case::II), false);
    CHECK(with.slope == doctest::Approx(2).epsilon(0.05));
    CHECK(without.slope == doctest::Approx(1).epsilon(0.05));
}

TEST_CASE("symbolic series instantiated on the lattice matches the correspondence")
{
    ParticleParams const p = params_for(Case::I);
    auto const r = opalg_crosscheck(LatticeSpec::default_for(Case::I, p), p, 1e-4);
    CHECK(r.terms > 0);
    CHECK(r.pass());
    CHECK(to_json(r).contains("difference"));
}
