#pragma once

#include "spinfw/qfw/lattice.hpp"

namespace spinfw::qfw
{

//! Relative tolerance of the odd-interaction precondition.
inline constexpr double odd_part_tolerance = 1e-12;

//! max |beta O beta + O| with O = H - beta m c^2.
double odd_part_error(LatticeHamiltonian const& h, ParticleParams const& params);

/*!
 * Exact FW transform H' = beta sqrt(m^2 c^4 + O^2) of H = beta m c^2 + O.
 * The square root comes from a Hermitian eigendecomposition of the full
 * matrix, so block-diagonality is a measured property, not imposed.
 * Throws PreconditionError when O is not odd, InternalError on a negative
 * eigenvalue of m^2 c^4 + O^2.
 */
LatticeHamiltonian eriksen_fw(LatticeHamiltonian const& h,
                              ParticleParams const& params);

//! Sorted eigenvalues of a Hermitian matrix.
Eigen::VectorXd sorted_eigenvalues(ComplexMatrix const& m);

//! max |[beta, H']| entry.
double block_diagonality_error(ComplexMatrix const& m);

}  // namespace spinfw::qfw
