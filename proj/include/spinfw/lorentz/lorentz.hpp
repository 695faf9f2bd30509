#pragma once

#include <utility>

#include "spinfw/core/particle.hpp"
#include "spinfw/core/types.hpp"

namespace spinfw::lorentz
{

//! Tolerance applied to the constraints U.U = c^2 and U.S = 0 on input.
inline constexpr double constraint_precondition_tol = 1e-10;
//! Looser tolerance used by bmt_rhs, which receives integrated data.
inline constexpr double bmt_precondition_tol = 1e-8;

//! Pure boost Lambda^mu_nu(beta), mapping lab components to the moving frame.
using BoostMatrix = Matrix4;
//! Antisymmetric S^{mu nu}.
using SpinTensor = Matrix4;
//! Field-strength tensor F^{mu nu}.
using FieldTensor = Matrix4;

//! Boost to a frame moving with velocity beta c; throws DomainError if |beta|>=1.
BoostMatrix boost_matrix(ThreeVector const& beta);

//! Lorentz factor 1/sqrt(1 - beta^2); throws DomainError if |beta|>=1.
double lorentz_gamma(ThreeVector const& beta);

//! Field transformation to the boosted frame: returns (E', B').
std::pair<ThreeVector, ThreeVector>
boost_fields(ThreeVector const& e, ThreeVector const& b,
             ThreeVector const& beta);

FourVector boost_four_vector(FourVector const& v, ThreeVector const& beta);

//! F^{0i} = -E^i, F^{ij} = -eps_ijk B^k.
FieldTensor field_tensor(ThreeVector const& e, ThreeVector const& b);

//! Inverse of field_tensor; the tensor must be antisymmetric.
std::pair<ThreeVector, ThreeVector> fields_from_tensor(FieldTensor const& f);

//! eps^{mu nu alpha beta} with eps^{0123} = +1.
int levi_civita4(int mu, int nu, int alpha, int beta);

/*!
 * Spin tensor S^{mu nu} = (1/c) eps^{mu nu alpha beta} U_alpha S_beta.
 *
 * Requires U.U = c^2 and U.S = 0 within constraint_precondition_tol
 * (relative); throws PreconditionError otherwise.
 */
SpinTensor spin_tensor_from_vector(FourVector const& s, FourVector const& u,
                                   double c);

//! Dual map S^alpha = (1/2c) eps^{alpha beta gamma delta} U_beta S_{gamma delta}.
FourVector spin_vector_from_tensor(SpinTensor const& s, FourVector const& u,
                                   double c);

//! U_pi = (gamma_pi c, pi/m).
FourVector four_velocity_pi(ThreeVector const& pi, ParticleParams const& params);

//! Lab-frame spin four-vector for rest-frame spin s, comoving with v_pi.
FourVector spin_four_vector_lab(ThreeVector const& s, ThreeVector const& pi,
                                ParticleParams const& params);

/*!
 * Right-hand side dS^alpha/dtau of the BMT equation with an extra force f:
 *
 * gamma_m F^{ab} S_b + (gamma_m - e/mc)/c^2 U^a (S_l F^{lm} U_m)
 *   - 1/(m c^2) U^a S_l f^l
 */
FourVector bmt_rhs(FourVector const& s, FourVector const& u,
                   FieldTensor const& f_tensor, FourVector const& force,
                   ParticleParams const& params);

//! dU^alpha/dtau = ((e/c) F^{ab} U_b + f^a) / m.
FourVector lorentz_force_rhs(FourVector const& u, FieldTensor const& f_tensor,
                             FourVector const& force,
                             ParticleParams const& params);

}  // namespace spinfw::lorentz
