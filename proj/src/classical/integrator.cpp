#include "spinfw/classical/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace spinfw::classical
{

void IntegratorSpec::validate() const
{
    if (!(step > 0) || !std::isfinite(step))
    {
        throw ConfigurationError("integrator step must be positive");
    }
    if (method == IntegratorMethod::RKF45
        && (!(tolerance > 0) || !std::isfinite(tolerance)))
    {
        throw ConfigurationError("integrator tolerance must be positive");
    }
    if (max_steps == 0)
    {
        throw ConfigurationError("integrator max_steps must be positive");
    }
    if (sample_stride == 0)
    {
        throw ConfigurationError("integrator sample_stride must be positive");
    }
}

namespace
{

using Vec9 = Eigen::Matrix<double, 9, 1>;

Vec9 pack(PhaseState const& s)
{
    Vec9 v;
    v << s.x, s.p, s.s;
    return v;
}

PhaseState unpack(Vec9 const& v, double t)
{
    PhaseState s;
    s.x = v.segment<3>(0);
    s.p = v.segment<3>(3);
    s.s = v.segment<3>(6);
    s.t = t;
    return s;
}

class System
{
  public:
    System(FieldModel const& model, ParticleParams const& params,
           VelocityPrescription prescription)
        : model_(model), params_(params), prescription_(prescription)
    {
    }

    Vec9 operator()(Vec9 const& y) const
    {
        PhaseRate const r = eom_rhs(unpack(y, 0), model_, params_, prescription_);
        Vec9 out;
        out << r.dx, r.dp, r.ds;
        return out;
    }

    TrajectorySample sample(PhaseState const& state, double s_raw) const
    {
        TrajectorySample out;
        out.t = state.t;
        out.state = state;
        out.h_total = h_total(state, model_, params_);
        out.s_norm = state.s.norm();
        out.s_norm_raw = s_raw;
        FieldSample const f = sample_field(model_, state.x);
        out.gamma_pi = gamma_pi(kinematic_momentum(state.p, f.a, params_),
                                params_);
        ThreeVector const v
            = eom_rhs(state, model_, params_, prescription_).dx;
        double const b2 = v.squaredNorm() / (params_.c() * params_.c());
        out.gamma_velocity = b2 < 1 ? 1 / std::sqrt(1 - b2)
                                    : std::numeric_limits<double>::infinity();
        return out;
    }

  private:
    FieldModel const& model_;
    ParticleParams const& params_;
    VelocityPrescription prescription_;
};

Vec9 rk4_step(System const& f, Vec9 const& y, double h)
{
    Vec9 const k1 = f(y);
    Vec9 const k2 = f(y + 0.5 * h * k1);
    Vec9 const k3 = f(y + 0.5 * h * k2);
    Vec9 const k4 = f(y + h * k3);
    return y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
}

// Fehlberg 4(5) pair; returns the 4th-order solution and the error estimate.
std::pair<Vec9, Vec9> rkf45_step(System const& f, Vec9 const& y, double h)
{
    Vec9 const k1 = f(y);
    Vec9 const k2 = f(y + h * (k1 / 4));
    Vec9 const k3 = f(y + h * (3.0 / 32 * k1 + 9.0 / 32 * k2));
    Vec9 const k4 = f(y + h * (1932.0 / 2197 * k1 - 7200.0 / 2197 * k2
                               + 7296.0 / 2197 * k3));
    Vec9 const k5 = f(y + h * (439.0 / 216 * k1 - 8 * k2 + 3680.0 / 513 * k3
                               - 845.0 / 4104 * k4));
    Vec9 const k6 = f(y + h * (-8.0 / 27 * k1 + 2 * k2 - 3544.0 / 2565 * k3
                               + 1859.0 / 4104 * k4 - 11.0 / 40 * k5));
    Vec9 const y4 = y + h * (25.0 / 216 * k1 + 1408.0 / 2565 * k3
                             + 2197.0 / 4104 * k4 - k5 / 5);
    Vec9 const y5 = y + h * (16.0 / 135 * k1 + 6656.0 / 12825 * k3
                             + 28561.0 / 56430 * k4 - 9.0 / 50 * k5
                             + 2.0 / 55 * k6);
    return {y4, y5 - y4};
}

class Recorder
{
  public:
    Recorder(System const& system, IntegratorSpec const& spec, double s0)
        : system_(system), spec_(spec), s0_(s0)
    {
    }

    void record_initial(PhaseState const& state)
    {
        traj_.samples.push_back(system_.sample(state, state.s.norm()));
    }

    // Applies conservative renormalization to y, then records if due.
    void accept(Vec9& y, double t, bool last)
    {
        ++traj_.steps;
        double const raw = y.segment<3>(6).norm();
        double const drift = s0_ > 0 ? std::abs(raw - s0_) / s0_ : 0;
        traj_.max_raw_spin_drift = std::max(traj_.max_raw_spin_drift, drift);
        if (spec_.renormalize_spin && drift > spin_renormalization_threshold
            && raw > 0)
        {
            y.segment<3>(6) *= s0_ / raw;
            ++traj_.renormalizations;
        }
        if (last || traj_.steps % spec_.sample_stride == 0)
        {
            traj_.samples.push_back(system_.sample(unpack(y, t), raw));
        }
    }

    Trajectory& trajectory() { return traj_; }

  private:
    System const& system_;
    IntegratorSpec const& spec_;
    double s0_;
    Trajectory traj_;
};

}  // namespace

Trajectory integrate(PhaseState const& state0, FieldModel const& model,
                     ParticleParams const& params, IntegratorSpec const& spec,
                     double duration)
{
    spec.validate();
    if (!(duration > 0) || !std::isfinite(duration))
    {
        throw ConfigurationError("integration duration must be positive");
    }
    if (!(state0.s.norm() > 0) || !state0.s.allFinite())
    {
        throw PreconditionError("spin vector must be nonzero and finite");
    }

    System const system(model, params, spec.prescription);
    Recorder rec(system, spec, state0.s.norm());
    rec.trajectory().prescription = spec.prescription;
    rec.record_initial(state0);
    Vec9 y = pack(state0);
    double const t0 = state0.t;

    if (spec.method == IntegratorMethod::RK4)
    {
        auto const n = static_cast<std::size_t>(
            std::max(1.0, std::ceil(duration / spec.step * (1 - 1e-12))));
        if (n > spec.max_steps)
        {
            throw ConfigurationError("RK4 run needs more than max_steps steps");
        }
        double const h = duration / static_cast<double>(n);
        for (std::size_t i = 1; i <= n; ++i)
        {
            y = rk4_step(system, y, h);
            rec.accept(y, t0 + static_cast<double>(i) * h, i == n);
        }
        return std::move(rec.trajectory());
    }

    double t = 0;
    double h = std::min(spec.step, duration);
    double const h_min = spec.min_step_fraction * duration;
    std::size_t attempts = 0;
    while (t < duration)
    {
        if (++attempts > spec.max_steps)
        {
            throw IntegrationError("RKF45 exceeded max_steps",
                                   std::move(rec.trajectory()));
        }
        bool const last = t + h >= duration;
        if (last)
        {
            h = duration - t;
        }
        auto [y4, err] = rkf45_step(system, y, h);
        double ratio = 0;
        for (int i = 0; i < 9; ++i)
        {
            ratio = std::max(ratio, std::abs(err[i])
                                        / (spec.tolerance * (1 + std::abs(y[i]))));
        }
        if (!std::isfinite(ratio))
        {
            ratio = 1e10;
        }
        if (ratio <= 1)
        {
            t = last ? duration : t + h;
            y = y4;
            rec.accept(y, t0 + t, last);
        }
        double const factor
            = ratio > 0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
        h *= std::clamp(factor, 0.1, 5.0);
        if (h < h_min && t < duration)
        {
            std::ostringstream os;
            os << "RKF45 step underflow at t = " << t0 + t;
            throw IntegrationError(os.str(), std::move(rec.trajectory()));
        }
    }
    return std::move(rec.trajectory());
}

}  // namespace spinfw::classical
