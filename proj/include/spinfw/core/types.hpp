#pragma once

#include <Eigen/Dense>

namespace spinfw
{

using ThreeVector = Eigen::Vector3d;
using Matrix3 = Eigen::Matrix3d;

//! Contravariant four-vector (v^0, v^1, v^2, v^3), metric (+,-,-,-).
using FourVector = Eigen::Vector4d;
using Matrix4 = Eigen::Matrix4d;

//! Canonical phase-space point of the classical spinor.
struct PhaseState
{
    ThreeVector x{ThreeVector::Zero()};  //!< position
    ThreeVector p{ThreeVector::Zero()};  //!< canonical momentum
    ThreeVector s{ThreeVector::Zero()};  //!< rest-frame spin (units of hbar)
    double t{0};  //!< lab time
};

//! Minkowski metric diag(1,-1,-1,-1).
inline Matrix4 metric()
{
    return Eigen::Vector4d(1, -1, -1, -1).asDiagonal();
}

inline FourVector make_four_vector(double t, ThreeVector const& x)
{
    return {t, x.x(), x.y(), x.z()};
}

inline ThreeVector spatial(FourVector const& v)
{
    return v.tail<3>();
}

//! Lower the index: v_mu = g_{mu nu} v^nu.
inline FourVector lower(FourVector const& v)
{
    return {v[0], -v[1], -v[2], -v[3]};
}

inline double minkowski_dot(FourVector const& a, FourVector const& b)
{
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

//! Fully antisymmetric symbol with eps_{123} = +1.
inline int levi_civita(int i, int j, int k)
{
    return (i - j) * (j - k) * (k - i) / 2;
}

}  // namespace spinfw
