#pragma once

#include <vector>

#include "spinfw/classical/integrator.hpp"
#include "spinfw/lorentz/lorentz.hpp"

namespace spinfw::classical
{

struct BmtResidualOptions
{
    //! Include the extra-force term f^alpha in the BMT right-hand side.
    bool include_force{true};
    //! Largest admissible rotation angle per sample interval.
    double max_phase_per_step{0.5};
};

struct BmtResidual
{
    //! max |dS/dtau (stencil) - BMT rhs|
    double max_residual{0};
    //! Same with dS/dtau evaluated analytically from the equations of motion:
    //! the part of the residual that no step refinement removes.
    double max_analytic_residual{0};
    //! max |dS/dtau (stencil) - dS/dtau (analytic)|: pure differentiation error.
    double max_stencil_error{0};
    //! Analytic residual after adding the Thomas rotation driven by f to the
    //! spin flow; vanishes to round-off when f is included.
    double max_thomas_corrected_residual{0};
    //! Largest |gamma_velocity - gamma_pi| along the trajectory.
    double max_gamma_difference{0};
    std::size_t evaluated_samples{0};
};

/*!
 * Extra four-force f^alpha carried by the trajectory beyond the Lorentz force
 * along U_pi.
 *
 * Spatial part gamma_pi (dpi/dt - e(E + v_pi x B / c)) with dpi/dt from the
 * equations of motion; time part f . v_pi / c, which keeps f orthogonal to
 * U_pi.
 */
FourVector extra_four_force(PhaseState const& state, FieldModel const& model,
                            ParticleParams const& params,
                            VelocityPrescription prescription);

/*!
 * dS/dtau_pi of the lab spin four-vector along the flow, from the chain rule
 * through pi and s.
 */
FourVector spin_four_vector_rate(PhaseState const& state,
                                 FieldModel const& model,
                                 ParticleParams const& params,
                                 VelocityPrescription prescription);

/*!
 * Thomas precession vector gamma^2/(gamma+1) (a_f x v_pi)/c^2 due to the part
 * a_f of the acceleration produced by the extra force.
 */
ThreeVector force_thomas_precession(PhaseState const& state,
                                    FieldModel const& model,
                                    ParticleParams const& params,
                                    VelocityPrescription prescription);

/*!
 * Max-norm difference between dS/dtau_pi of the reconstructed spin
 * four-vector and the BMT right-hand side along a fixed-step trajectory.
 *
 * dS/dt uses the five-point central stencil; dtau_pi = dt / gamma_pi.
 * Throws DiagnosticError for fewer than five samples, non-uniform sampling
 * or a step too coarse for the fastest rotation in the trajectory.
 */
BmtResidual bmt_consistency_residual(Trajectory const& traj,
                                     FieldModel const& model,
                                     ParticleParams const& params,
                                     BmtResidualOptions const& options = {});

//! c A_D (div E - v_pi . curl B / c) for static fields.
double darwin_classical_hd(PhaseState const& state, FieldModel const& model,
                           ParticleParams const& params, double a_d);

/*!
 * gamma F_pi(pi, E, B) - F_pi(pi', E', B') for a boost beta, with pi' from
 * the four-vector transform of (gamma_pi m c, pi) (spin energy neglected).
 */
ThreeVector boost_covariance_residual(ThreeVector const& pi,
                                      ThreeVector const& e,
                                      ThreeVector const& b,
                                      ThreeVector const& beta,
                                      ParticleParams const& params);

struct ScalingResult
{
    std::vector<double> amplitudes;
    std::vector<double> residuals;
    double slope{0};
};

//! Residual norm for fields lambda * (E, B) over the amplitude list.
ScalingResult boost_covariance_scaling(ThreeVector const& pi,
                                       ThreeVector const& e_unit,
                                       ThreeVector const& b_unit,
                                       ThreeVector const& beta,
                                       ParticleParams const& params,
                                       std::vector<double> const& amplitudes);

}  // namespace spinfw::classical
