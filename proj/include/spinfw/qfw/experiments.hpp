#pragma once

#include <vector>

#include <json.hpp>

#include "spinfw/qfw/correspondence.hpp"
#include "spinfw/qfw/eriksen.hpp"

namespace spinfw::qfw
{

struct SpectrumCheck
{
    double lambda{0};
    //! max |sorted eig(H') - sorted eig(H)|
    double eigenvalue_error{0};
    //! max |[beta, H']|
    double block_error{0};
    double hermiticity_h{0};
    double hermiticity_h_prime{0};
    double odd_error{0};
};

SpectrumCheck eriksen_check(Case c, LatticeSpec const& lattice, double lambda,
                            ParticleParams const& params);

//! max |eriksen_fw(H) - correspondence| on the particle block.
double correspondence_residual(Case c, LatticeSpec const& lattice, double lambda,
                               ParticleParams const& params,
                               CorrespondenceOptions const& options);

struct ScalingExperiment
{
    Case which{Case::I};
    LatticeSpec lattice;
    bool include_darwin{true};
    std::vector<double> lambdas;
    std::vector<double> residuals;
    double slope{0};
};

/*!
 * Residuals over >= 3 geometrically spaced amplitudes (computed concurrently)
 * and the least-squares log-log slope. Throws PreconditionError on a bad
 * amplitude list, DiagnosticError on a degenerate fit.
 */
ScalingExperiment residual_scaling(Case c, LatticeSpec const& lattice,
                                   ParticleParams const& params,
                                   std::vector<double> const& lambdas,
                                   bool include_darwin);

struct ParityResult
{
    double hamiltonian{0};
    double transformed{0};
};

//! P = beta (x) site inversion; returns max |P X P^-1 - X| for H and H'.
ParityResult parity_check(Case c, LatticeSpec const& lattice, double lambda,
                          ParticleParams const& params);

struct DarwinComparison
{
    std::vector<double> lambdas;
    std::vector<double> weyl_residuals;
    std::vector<double> classical_residuals;
    std::vector<double> omitted_residuals;
    double weyl_slope{0};
    double classical_slope{0};
    double omitted_slope{0};
    double kappa_d{0};
    //! c A_D fitted on the nonrelativistic sub-block at the smallest lambda.
    double classical_coefficient{0};
    double gamma_max{1};
    //! Relative difference of the two Darwin operators on the modes |k| <= k_1.
    double nonrelativistic_difference{0};
    //! Per lambda, site basis: residual gap classical - Weyl and
    //! (gamma_max - 1)/2 * max |Darwin term|. Diagnostic only.
    std::vector<double> gaps;
    std::vector<double> required_gaps;
    //! Same comparison in the plane-wave basis at the smallest lambda, where
    //! the O(lambda^2) remainder is negligible. This is the pass condition.
    double spectral_gap{0};
    double spectral_required_gap{0};

    bool negative_result_confirmed() const;
};

/*!
 * Case II only: eriksen_fw against the correspondence with the Darwin term
 * in the (1/gamma_pi)_Weyl form, in the classical c A_D div E form, and
 * omitted.
 */
DarwinComparison darwin_vs_classical_hd(LatticeSpec const& lattice,
                                        ParticleParams const& params,
                                        std::vector<double> const& lambdas);

//! Default amplitude lists.
std::vector<double> default_lambdas(Case c);
//! Default parameters: case I m = e = hbar = c = 1, mu' = 0; case II e = 0,
//! mu' = 1/2.
ParticleParams default_params(Case c);

nlohmann::json to_json(SpectrumCheck const& s);
nlohmann::json to_json(ScalingExperiment const& s);
nlohmann::json to_json(ParityResult const& p);
nlohmann::json to_json(DarwinComparison const& d);
nlohmann::json to_json(LatticeSpec const& l);

}  // namespace spinfw::qfw
