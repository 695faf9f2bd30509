#pragma once

#include <Eigen/Dense>

#include "spinfw/core/particle.hpp"
#include "spinfw/opalg/ordering.hpp"

namespace spinfw::qfw
{

using opalg::Case;
using ComplexMatrix = Eigen::MatrixXcd;

//! Hard upper bound on the configurable momentum cutoff ratio.
inline constexpr double max_cutoff_ratio = 0.9;

/*!
 * Periodic lattice of `sites` points per axis over period L, in one or two
 * dimensions. Momenta are spectral: p = hbar k on the discrete Fourier grid,
 * with the Nyquist mode mapped to zero so that p is odd under inversion.
 */
struct LatticeSpec
{
    int dimension{1};
    int sites{64};
    double period{1};
    //! Cutoff ratio: c |p_max| <= rho m c^2.
    double rho{0.5};

    double spacing() const { return period / sites; }
    //! Number of spatial sites.
    int spatial_size() const;
    //! Spinor (4) times spatial size.
    int matrix_size() const { return 4 * spatial_size(); }
    //! hbar k_max sqrt(dimension): magnitude of the corner momentum.
    double max_momentum(ParticleParams const& params) const;

    //! Throws ConfigurationError on bad sizes or a cutoff violation.
    void validate(ParticleParams const& params) const;

    //! Smallest period meeting the cutoff exactly.
    static LatticeSpec with_cutoff(int dimension, int sites, double rho,
                                   ParticleParams const& params);
    //! Case I: 2D 12x12; case II: 1D 64; rho = 0.5.
    static LatticeSpec default_for(Case c, ParticleParams const& params);
};

//! Spatial operators on a lattice (size spatial_size()).
struct LatticeOperators
{
    ComplexMatrix px, py, pz;
    //! Site coordinates (x only matters for the models used here).
    Eigen::VectorXd x, y;
    //! Lattice momenta hbar k_m per axis (Nyquist mode zero).
    Eigen::VectorXd axis_momenta;
    //! Site inversion n -> -n mod N on every axis.
    ComplexMatrix inversion;
};

LatticeOperators build_operators(LatticeSpec const& lattice,
                                 ParticleParams const& params);

struct LatticeHamiltonian
{
    ComplexMatrix matrix;
    Case which{Case::I};
    double lambda{0};
    LatticeSpec lattice;
    //! Darwin coefficient used by build_correspondence (0 when omitted).
    double darwin_coefficient{0};
};

//! Field amplitude for a dimensionless lambda: e hbar B0 / (m c) = lambda m c^2
//! (case I) or mu' E0 = lambda m c^2 (case II).
double field_amplitude(Case c, double lambda, ParticleParams const& params);

/*!
 * Case I: H = beta m c^2 + c alpha.pi on a 2D lattice with A_y(x) from the
 * sinusoidal magnetostatic model (mu' must vanish, e must not).
 * Case II: H = beta m c^2 + c alpha.p + i mu' beta alpha.E on a 1D lattice with
 * E_x(x) from the sinusoidal electrostatic model (e must vanish).
 */
LatticeHamiltonian build_hamiltonian(Case c, LatticeSpec const& lattice,
                                     double lambda, ParticleParams const& params);

//! kron(spinor 4x4, spatial) with index spinor * M + site.
ComplexMatrix spinor_kron(Eigen::Matrix4cd const& spinor,
                          ComplexMatrix const& spatial);

double max_abs(ComplexMatrix const& m);
double hermiticity_error(ComplexMatrix const& m);

//! beta (x) identity for a lattice of M sites.
ComplexMatrix beta_matrix(int spatial_size);

//! Upper-left (particle) 2M x 2M block.
ComplexMatrix particle_block(ComplexMatrix const& m);

}  // namespace spinfw::qfw
