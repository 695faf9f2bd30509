#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinfw/classical/hamiltonian.hpp"
#include "spinfw/core/errors.hpp"

namespace spinfw::classical
{

enum class IntegratorMethod
{
    RK4,
    RKF45
};

struct IntegratorSpec
{
    IntegratorMethod method{IntegratorMethod::RK4};
    double step{1e-3};        //!< fixed step (RK4) or initial step (RKF45)
    double tolerance{1e-10};  //!< RKF45 local error tolerance
    std::size_t max_steps{10'000'000};
    VelocityPrescription prescription{VelocityPrescription::Hamiltonian};
    //! Rescale s back to |s(0)| when the relative drift exceeds 1e-12.
    bool renormalize_spin{true};
    //! Keep every n-th step (the final state is always kept).
    std::size_t sample_stride{1};
    //! Smallest admissible adaptive step, relative to the duration.
    double min_step_fraction{1e-14};

    //! Throws ConfigurationError if a field is out of range.
    void validate() const;
};

inline constexpr double spin_renormalization_threshold = 1e-12;

struct TrajectorySample
{
    double t{0};
    PhaseState state;
    double h_total{0};
    double s_norm{0};
    //! |s| before renormalization on the step that produced this sample.
    double s_norm_raw{0};
    //! gamma_pi and the Lorentz factor of dx/dt; they differ when H_spin != 0.
    double gamma_pi{1};
    double gamma_velocity{1};
};

struct Trajectory
{
    std::vector<TrajectorySample> samples;
    std::size_t steps{0};
    std::size_t renormalizations{0};
    //! Largest relative |s| drift seen before any renormalization.
    double max_raw_spin_drift{0};
    VelocityPrescription prescription{VelocityPrescription::Hamiltonian};
};

//! Adaptive integration failed; carries what was computed up to the failure.
class IntegrationError : public Error
{
  public:
    IntegrationError(std::string const& what, Trajectory partial)
        : Error(what), partial_(std::move(partial))
    {
    }
    Trajectory const& partial() const { return partial_; }

  private:
    Trajectory partial_;
};

//! Integrate Hamilton's equations from state0 over a duration T > 0.
Trajectory integrate(PhaseState const& state0, FieldModel const& model,
                     ParticleParams const& params, IntegratorSpec const& spec,
                     double duration);

}  // namespace spinfw::classical
