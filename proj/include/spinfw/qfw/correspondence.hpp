#pragma once

#include <array>
#include <functional>

#include "spinfw/qfw/lattice.hpp"

namespace spinfw::qfw
{

//! Tail bound demanded of every truncated Weyl series (relative to max |X|).
inline constexpr double weyl_tail_tolerance = 1e-12;
inline constexpr int weyl_max_terms = 5000;

//! Taylor coefficient g_n of g(x) in x = pi^2 / (m c)^2.
using SeriesCoefficients = std::function<double(int)>;

//! C(1/2, n) and C(-1/2, n) as doubles.
double binomial_half(int n);
double binomial_minus_half(int n);

//! 1/gamma, 1/(gamma (gamma + 1)) and 1/(gamma + 1) in x = pi^2/(mc)^2.
SeriesCoefficients inverse_gamma_series();
SeriesCoefficients inverse_gamma_gamma_plus_one_series();
SeriesCoefficients inverse_gamma_plus_one_series();

struct WeylSeriesInfo
{
    int terms{0};
    double spectral_radius{0};
    double tail_bound{0};
};

/*!
 * Weyl-ordered functions (X g(pi^2))_Weyl = sum_n g_n (X pi^{2n})_Weyl / (mc)^{2n},
 * evaluated in the eigenbasis of the Hermitian pi^2 matrix, where
 * (X pi^{2n})_Weyl has entries X_ab (1/(n+1)) sum_l x_a^l x_b^{n-l}.
 */
class WeylCalculus
{
  public:
    WeylCalculus(ComplexMatrix const& pi_squared, ParticleParams const& params);

    /*!
     * Truncation is the smallest N with G r^{N+1} / (1 - r) below
     * weyl_tail_tolerance, where r is the spectral radius of pi^2/(mc)^2 and
     * G bounds |g_n|. Throws SeriesTruncationError when r >= 1 or N exceeds
     * weyl_max_terms.
     */
    ComplexMatrix apply(ComplexMatrix const& x, SeriesCoefficients const& g,
                        WeylSeriesInfo* info = nullptr) const;

    //! Plain matrix function f(pi^2) with f applied to eigenvalues.
    ComplexMatrix function(std::function<double(double)> const& f) const;

    double spectral_radius() const { return radius_; }

  private:
    ComplexMatrix vectors_;
    Eigen::VectorXd scaled_;  //!< eigenvalues / (mc)^2
    Eigen::VectorXd values_;
    double radius_{0};
};

//! Spatial matrices standing for the operator symbols.
struct SymbolMatrices
{
    std::array<ComplexMatrix, 3> pi;
    //! Lattice-consistent B_k from (c / (i hbar e)) [pi_i, pi_j]; zero when e = 0.
    std::array<ComplexMatrix, 3> b;
    std::array<ComplexMatrix, 3> e;
    ComplexMatrix phi;
    //! (i / hbar) sum_j [pi_j, E_j]
    ComplexMatrix div_e;
    ComplexMatrix pi_squared;

    //! Lattice derivative (i / hbar) [pi_j, f].
    ComplexMatrix derivative(int j, ComplexMatrix const& f, double hbar) const;
};

SymbolMatrices build_symbol_matrices(Case c, LatticeSpec const& lattice,
                                     double lambda, ParticleParams const& params);

//! (hbar^2 / 4mc)(3e / 2mc - gamma_m)
double darwin_coefficient(ParticleParams const& params);

enum class DarwinForm
{
    //! kappa_D (div E / gamma_pi)_Weyl
    WeylInverseGamma,
    //! Classical candidate c A_D div E without the 1/gamma_pi factor.
    ClassicalCandidate
};

struct CorrespondenceOptions
{
    bool include_darwin{true};
    DarwinForm darwin_form{DarwinForm::WeylInverseGamma};
    //! c A_D for the classical candidate.
    double classical_coefficient{0};
};

/*!
 * beta sqrt(c^2 pi^2 + m^2 c^4) + e phi
 *  - beta (hbar/2) sigma.[(gamma_m - e/mc + (e/mc)/gamma) B
 *          - (gamma_m - e/mc) (pi.B)pi-bar / (gamma (gamma+1) m^2 c^2)
 *          - beta (gamma_m - (e/mc) gamma/(gamma+1)) (pi x E)-bar / (gamma m c)]_Weyl
 *  + Darwin term
 */
LatticeHamiltonian build_correspondence(Case c, LatticeSpec const& lattice,
                                        double lambda, ParticleParams const& params,
                                        bool include_darwin);
LatticeHamiltonian build_correspondence(Case c, LatticeSpec const& lattice,
                                        double lambda, ParticleParams const& params,
                                        CorrespondenceOptions const& options,
                                        WeylSeriesInfo* info = nullptr);

}  // namespace spinfw::qfw
