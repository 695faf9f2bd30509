#pragma once

#include "spinfw/core/field_model.hpp"
#include "spinfw/core/particle.hpp"
#include "spinfw/core/types.hpp"

namespace spinfw::classical
{

/*!
 * Spin precession vector F_pi(pi, E, B) of the Hamiltonian spin term.
 *
 * F = (gm - e/mc + (e/mc)/g) B
 *     - (gm - e/mc) (pi.B) pi / (g (g+1) m^2 c^2)
 *     - (gm - (e/mc) g/(g+1)) (pi x E) / (g m c),      g = gamma_pi.
 */
ThreeVector precession_vector(ThreeVector const& pi, ThreeVector const& e,
                              ThreeVector const& b,
                              ParticleParams const& params);

//! dF_i/dpi_j at fixed fields.
Matrix3 precession_jacobian(ThreeVector const& pi, ThreeVector const& e,
                            ThreeVector const& b, ParticleParams const& params);

//! Low-speed approximation of the precession vector in terms of beta = v/c.
ThreeVector precession_vector_low_speed(ThreeVector const& beta,
                                        ThreeVector const& e,
                                        ThreeVector const& b,
                                        ParticleParams const& params);

double h_orbit(PhaseState const& state, FieldModel const& model,
               ParticleParams const& params);

double h_spin(PhaseState const& state, FieldModel const& model,
              ParticleParams const& params);

//! h_orbit + h_spin; the O(F^2, hbar^2) remainder is not modeled.
double h_total(PhaseState const& state, FieldModel const& model,
               ParticleParams const& params);

struct HamiltonGradient
{
    ThreeVector dh_dx;
    ThreeVector dh_dp;
};

//! Analytic gradients of h_total, including the momentum dependence of F_pi.
HamiltonGradient grad_h(PhaseState const& state, FieldModel const& model,
                        ParticleParams const& params);

/*!
 * How dx/dt is obtained.
 *
 * Hamiltonian: the full canonical flow, dx/dt = dH/dp.
 * KinematicVelocity: dx/dt = v_pi; the spin term's momentum dependence is
 * dropped from the orbit, which is the T-BMT prescription.
 */
enum class VelocityPrescription
{
    Hamiltonian,
    KinematicVelocity
};

struct PhaseRate
{
    ThreeVector dx;
    ThreeVector dp;
    ThreeVector ds;
};

PhaseRate eom_rhs(PhaseState const& state, FieldModel const& model,
                  ParticleParams const& params,
                  VelocityPrescription prescription
                  = VelocityPrescription::Hamiltonian);

}  // namespace spinfw::classical
