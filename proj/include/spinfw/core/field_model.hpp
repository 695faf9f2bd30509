#pragma once

#include <string>
#include <variant>
#include <vector>

#include "spinfw/core/particle.hpp"
#include "spinfw/core/types.hpp"

namespace spinfw
{

/*!
 * Potentials, fields and their first derivatives at one point.
 *
 * Derivative matrices are indexed (component, direction):
 * grad_b(i, j) = dB_i/dx_j, jac_a(i, j) = dA_i/dx_j.
 */
struct FieldSample
{
    double phi{0};
    ThreeVector a{ThreeVector::Zero()};
    ThreeVector e{ThreeVector::Zero()};
    ThreeVector b{ThreeVector::Zero()};
    double div_e{0};
    Matrix3 grad_b{Matrix3::Zero()};
    Matrix3 grad_e{Matrix3::Zero()};
    ThreeVector grad_phi{ThreeVector::Zero()};
    Matrix3 jac_a{Matrix3::Zero()};

    FieldSample& operator+=(FieldSample const& other);
};

//! Homogeneous fields; phi = -E0.x and A = B0 x x / 2.
struct UniformField
{
    ThreeVector e0{ThreeVector::Zero()};
    ThreeVector b0{ThreeVector::Zero()};
};

//! B = (-(b/2) x, -(b/2) y, B0 + b z): divergence- and curl-free.
struct SternGerlachField
{
    double b0{1};
    double gradient{0};
};

//! E = (A sin(2 pi x / L), 0, 0), phi = (A L / 2 pi) cos(2 pi x / L).
struct SinusoidalElectrostatic
{
    double amplitude{0};
    double period{1};
};

//! A = (0, (A L / 2 pi) sin(2 pi x / L), 0), B = (0, 0, A cos(2 pi x / L)).
struct SinusoidalMagnetostatic
{
    double amplitude{0};
    double period{1};
};

class FieldModel;

struct Superposition
{
    std::vector<FieldModel> parts;
};

//! Static analytic electromagnetic field configuration.
class FieldModel
{
  public:
    using Variant = std::variant<UniformField,
                                 SternGerlachField,
                                 SinusoidalElectrostatic,
                                 SinusoidalMagnetostatic,
                                 Superposition>;

    FieldModel() : model_(UniformField{}) {}
    FieldModel(UniformField m) : model_(std::move(m)) {}
    FieldModel(SternGerlachField m) : model_(std::move(m)) {}
    FieldModel(SinusoidalElectrostatic m) : model_(std::move(m)) {}
    FieldModel(SinusoidalMagnetostatic m) : model_(std::move(m)) {}
    FieldModel(Superposition m) : model_(std::move(m)) {}

    Variant const& variant() const { return model_; }

    //! Human-readable tag of the model kind.
    std::string kind() const;

  private:
    Variant model_;
};

//! Evaluate potentials, fields and first derivatives analytically.
FieldSample sample_field(FieldModel const& model, ThreeVector const& x);

//! pi = p - (e/c) A.
ThreeVector kinematic_momentum(ThreeVector const& p, ThreeVector const& a,
                               ParticleParams const& params);

//! gamma_pi = sqrt(1 + (pi/mc)^2).
double gamma_pi(ThreeVector const& pi, ParticleParams const& params);

//! v_pi = pi / (gamma_pi m).
ThreeVector v_pi(ThreeVector const& pi, ParticleParams const& params);

}  // namespace spinfw
