#include "spinfw/qfw/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "spinfw/core/errors.hpp"
#include "spinfw/core/fit.hpp"
#include "spinfw/opalg/verify.hpp"

namespace spinfw::qfw
{

namespace
{

using Complex = std::complex<double>;

void check_lambdas(std::vector<double> const& lambdas)
{
    if (lambdas.size() < 3)
    {
        throw PreconditionError("scaling needs at least three amplitudes");
    }
    for (double l : lambdas)
    {
        if (!(l > 0) || !std::isfinite(l))
        {
            throw PreconditionError("amplitudes must be positive");
        }
    }
    double const ratio = lambdas[1] / lambdas[0];
    for (std::size_t i = 2; i < lambdas.size(); ++i)
    {
        if (std::abs(lambdas[i] / lambdas[i - 1] / ratio - 1) > 1e-6)
        {
            throw PreconditionError("amplitudes must be geometrically spaced");
        }
    }
}

// Fourier modes m = first .. first + count - 1 as columns (1D).
ComplexMatrix fourier_modes(LatticeSpec const& lattice, int first, int count)
{
    int const n = lattice.sites;
    ComplexMatrix q(n, count);
    for (int col = 0; col < count; ++col)
    {
        int const m = first + col;
        for (int site = 0; site < n; ++site)
        {
            q(site, col) = std::polar(1 / std::sqrt(static_cast<double>(n)),
                                      2 * std::numbers::pi * m * site / n);
        }
    }
    return q;
}

template <typename F>
std::vector<double> map_concurrently(std::vector<double> const& xs, F f)
{
    std::vector<std::future<double>> jobs;
    jobs.reserve(xs.size());
    for (double x : xs)
    {
        jobs.push_back(std::async(std::launch::async, f, x));
    }
    std::vector<double> out;
    out.reserve(xs.size());
    for (auto& j : jobs)
    {
        out.push_back(j.get());
    }
    return out;
}

}  // namespace

SpectrumCheck eriksen_check(Case c, LatticeSpec const& lattice, double lambda,
                            ParticleParams const& params)
{
    LatticeHamiltonian const h = build_hamiltonian(c, lattice, lambda, params);
    LatticeHamiltonian const hp = eriksen_fw(h, params);
    SpectrumCheck out;
    out.lambda = lambda;
    out.odd_error = odd_part_error(h, params);
    out.hermiticity_h = hermiticity_error(h.matrix);
    out.hermiticity_h_prime = hermiticity_error(hp.matrix);
    ComplexMatrix const sym = 0.5 * (hp.matrix + hp.matrix.adjoint());
    out.eigenvalue_error
        = (sorted_eigenvalues(sym) - sorted_eigenvalues(h.matrix)).cwiseAbs().maxCoeff();
    out.block_error = block_diagonality_error(hp.matrix);
    return out;
}

double correspondence_residual(Case c, LatticeSpec const& lattice, double lambda,
                               ParticleParams const& params,
                               CorrespondenceOptions const& options)
{
    LatticeHamiltonian const hp
        = eriksen_fw(build_hamiltonian(c, lattice, lambda, params), params);
    LatticeHamiltonian const corr
        = build_correspondence(c, lattice, lambda, params, options);
    return max_abs(particle_block(hp.matrix - corr.matrix));
}

namespace
{

ComplexMatrix residual_matrix(LatticeSpec const& lattice, double lambda,
                              ParticleParams const& params,
                              CorrespondenceOptions const& options)
{
    LatticeHamiltonian const hp
        = eriksen_fw(build_hamiltonian(Case::II, lattice, lambda, params), params);
    return particle_block(
        hp.matrix - build_correspondence(Case::II, lattice, lambda, params, options).matrix);
}

}  // namespace

ScalingExperiment residual_scaling(Case c, LatticeSpec const& lattice,
                                   ParticleParams const& params,
                                   std::vector<double> const& lambdas,
                                   bool include_darwin)
{
    check_lambdas(lambdas);
    lattice.validate(params);
    ScalingExperiment out;
    out.which = c;
    out.lattice = lattice;
    out.include_darwin = include_darwin;
    out.lambdas = lambdas;
    CorrespondenceOptions options;
    options.include_darwin = include_darwin;
    out.residuals = map_concurrently(lambdas, [&](double l) {
        return correspondence_residual(c, lattice, l, params, options);
    });
    out.slope = log_log_slope(out.lambdas, out.residuals);
    return out;
}

ParityResult parity_check(Case c, LatticeSpec const& lattice, double lambda,
                          ParticleParams const& params)
{
    LatticeHamiltonian const h = build_hamiltonian(c, lattice, lambda, params);
    LatticeHamiltonian const hp = eriksen_fw(h, params);
    LatticeOperators const ops = build_operators(lattice, params);
    ComplexMatrix const p
        = spinor_kron(opalg::slot_matrix(opalg::Slot::beta()), ops.inversion);
    // P is real orthogonal and an involution: P^-1 = P^T = P.
    ComplexMatrix const p_inv = p.adjoint();
    ParityResult out;
    out.hamiltonian = max_abs(p * h.matrix * p_inv - h.matrix);
    out.transformed = max_abs(p * hp.matrix * p_inv - hp.matrix);
    return out;
}

bool DarwinComparison::negative_result_confirmed() const
{
    if (gaps.empty() || nonrelativistic_difference >= 1e-3)
    {
        return false;
    }
    if (!(spectral_gap >= spectral_required_gap))
    {
        return false;
    }
    return std::abs(weyl_slope - 2) <= 0.1 && classical_slope < 1.5;
}

DarwinComparison darwin_vs_classical_hd(LatticeSpec const& lattice,
                                        ParticleParams const& params,
                                        std::vector<double> const& lambdas)
{
    check_lambdas(lambdas);
    if (lattice.dimension != 1)
    {
        throw ConfigurationError("Darwin comparison uses the 1D case II lattice");
    }
    DarwinComparison out;
    out.lambdas = lambdas;
    out.kappa_d = darwin_coefficient(params);
    int const size = lattice.spatial_size();

    // Fit c A_D on the lowest modes at the smallest amplitude.
    double const l0 = *std::min_element(lambdas.begin(), lambdas.end());
    SymbolMatrices const s0 = build_symbol_matrices(Case::II, lattice, l0, params);
    WeylCalculus const weyl0(s0.pi_squared, params);
    ComplexMatrix const q = fourier_modes(lattice, -1, 3);
    {
        LatticeHamiltonian const hp
            = eriksen_fw(build_hamiltonian(Case::II, lattice, l0, params), params);
        CorrespondenceOptions none;
        none.include_darwin = false;
        LatticeHamiltonian const base
            = build_correspondence(Case::II, lattice, l0, params, none);
        ComplexMatrix const target
            = q.adjoint() * particle_block(hp.matrix - base.matrix).topLeftCorner(size, size) * q;
        ComplexMatrix const d = q.adjoint() * s0.div_e * q;
        Complex const num = (d.conjugate().cwiseProduct(target)).sum();
        double const den = d.squaredNorm();
        if (!(den > 0))
        {
            throw DiagnosticError("div E vanishes on the lowest modes");
        }
        out.classical_coefficient = num.real() / den;

        ComplexMatrix const weyl_form
            = out.kappa_d * (q.adjoint() * weyl0.apply(s0.div_e, inverse_gamma_series()) * q);
        ComplexMatrix const classical_form = out.classical_coefficient * d;
        out.nonrelativistic_difference
            = max_abs(weyl_form - classical_form) / max_abs(weyl_form);
    }
    out.gamma_max = std::sqrt(1 + weyl0.spectral_radius());

    CorrespondenceOptions weyl;
    CorrespondenceOptions classical;
    classical.darwin_form = DarwinForm::ClassicalCandidate;
    classical.classical_coefficient = out.classical_coefficient;
    CorrespondenceOptions omitted;
    omitted.include_darwin = false;

    out.weyl_residuals = map_concurrently(lambdas, [&](double l) {
        return correspondence_residual(Case::II, lattice, l, params, weyl);
    });
    out.classical_residuals = map_concurrently(lambdas, [&](double l) {
        return correspondence_residual(Case::II, lattice, l, params, classical);
    });
    out.omitted_residuals = map_concurrently(lambdas, [&](double l) {
        return correspondence_residual(Case::II, lattice, l, params, omitted);
    });
    out.weyl_slope = log_log_slope(lambdas, out.weyl_residuals);
    out.classical_slope = log_log_slope(lambdas, out.classical_residuals);
    out.omitted_slope = log_log_slope(lambdas, out.omitted_residuals);

    for (std::size_t i = 0; i < lambdas.size(); ++i)
    {
        SymbolMatrices const s = build_symbol_matrices(Case::II, lattice, lambdas[i], params);
        WeylCalculus const w(s.pi_squared, params);
        double const darwin
            = std::abs(out.kappa_d) * max_abs(w.apply(s.div_e, inverse_gamma_series()));
        out.gaps.push_back(out.classical_residuals[i] - out.weyl_residuals[i]);
        out.required_gaps.push_back((out.gamma_max - 1) / 2 * darwin);
    }

    // Plane-wave basis at the smallest amplitude, without the Nyquist mode
    // (its lattice momentum is zero, so div E couples it to the band edge
    // with a band-edge-sized aliased entry).
    {
        int const band = size - 1;
        ComplexMatrix const f = fourier_modes(lattice, -(size / 2) + 1, band);
        ComplexMatrix f2 = ComplexMatrix::Zero(2 * size, 2 * band);
        f2.topLeftCorner(size, band) = f;
        f2.bottomRightCorner(size, band) = f;
        auto spectral = [&](ComplexMatrix const& m) { return max_abs(f2.adjoint() * m * f2); };
        double const weyl_res = spectral(residual_matrix(lattice, l0, params, weyl));
        double const classical_res = spectral(residual_matrix(lattice, l0, params, classical));
        double const darwin = std::abs(out.kappa_d)
                              * max_abs(f.adjoint() * weyl0.apply(s0.div_e, inverse_gamma_series()) * f);
        out.spectral_gap = classical_res - weyl_res;
        out.spectral_required_gap = (out.gamma_max - 1) / 2 * darwin;
    }
    return out;
}

std::vector<double> default_lambdas(Case c)
{
    if (c == Case::I)
    {
        return {1e-2, 1e-3, 1e-4};
    }
    return {1e-3, 1e-4, 1e-5};
}

ParticleParams default_params(Case c)
{
    if (c == Case::I)
    {
        return ParticleParams::from_anomalous_moment(1, 1, 0);
    }
    return ParticleParams::from_anomalous_moment(1, 0, 0.5);
}

nlohmann::json to_json(LatticeSpec const& l)
{
    return {{"dimension", l.dimension}, {"sites", l.sites}, {"period", l.period},
            {"rho", l.rho}};
}

nlohmann::json to_json(SpectrumCheck const& s)
{
    return {{"lambda", s.lambda},
            {"eigenvalue_error", s.eigenvalue_error},
            {"block_error", s.block_error},
            {"hermiticity_h", s.hermiticity_h},
            {"hermiticity_h_prime", s.hermiticity_h_prime},
            {"odd_error", s.odd_error}};
}

nlohmann::json to_json(ScalingExperiment const& s)
{
    return {{"case", opalg::case_name(s.which)},
            {"lattice", to_json(s.lattice)},
            {"include_darwin", s.include_darwin},
            {"lambdas", s.lambdas},
            {"residuals", s.residuals},
            {"slope", s.slope}};
}

nlohmann::json to_json(ParityResult const& p)
{
    return {{"hamiltonian", p.hamiltonian}, {"transformed", p.transformed}};
}

nlohmann::json to_json(DarwinComparison const& d)
{
    return {{"lambdas", d.lambdas},
            {"weyl_residuals", d.weyl_residuals},
            {"classical_residuals", d.classical_residuals},
            {"omitted_residuals", d.omitted_residuals},
            {"weyl_slope", d.weyl_slope},
            {"classical_slope", d.classical_slope},
            {"omitted_slope", d.omitted_slope},
            {"kappa_d", d.kappa_d},
            {"classical_coefficient", d.classical_coefficient},
            {"gamma_max", d.gamma_max},
            {"nonrelativistic_difference", d.nonrelativistic_difference},
            {"gaps", d.gaps},
            {"required_gaps", d.required_gaps},
            {"spectral_gap", d.spectral_gap},
            {"spectral_required_gap", d.spectral_required_gap},
            {"negative_result_confirmed", d.negative_result_confirmed()}};
}

}  // namespace spinfw::qfw
