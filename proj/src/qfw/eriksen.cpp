#include "spinfw/qfw/eriksen.hpp"

#include <algorithm>
#include <sstream>

#include "spinfw/core/errors.hpp"

namespace spinfw::qfw
{

namespace
{

ComplexMatrix odd_part(LatticeHamiltonian const& h, ParticleParams const& params)
{
    int const size = h.lattice.spatial_size();
    double const mc2 = params.m() * params.c() * params.c();
    return h.matrix - mc2 * beta_matrix(size);
}

// sqrt of a Hermitian positive matrix.
ComplexMatrix hermitian_sqrt(ComplexMatrix const& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m);
    if (eig.info() != Eigen::Success)
    {
        throw InternalError("eigendecomposition failed");
    }
    Eigen::VectorXd const values = eig.eigenvalues();
    double const scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    if (values.minCoeff() < -1e-12 * scale)
    {
        std::ostringstream os;
        os << "negative eigenvalue " << values.minCoeff()
           << " of m^2 c^4 + O^2: numerical corruption";
        throw InternalError(os.str());
    }
    Eigen::VectorXd const roots = values.cwiseMax(0.0).cwiseSqrt();
    return eig.eigenvectors() * roots.cast<std::complex<double>>().asDiagonal()
           * eig.eigenvectors().adjoint();
}

}  // namespace

double odd_part_error(LatticeHamiltonian const& h, ParticleParams const& params)
{
    ComplexMatrix const o = odd_part(h, params);
    ComplexMatrix const beta = beta_matrix(h.lattice.spatial_size());
    return max_abs(beta * o * beta + o);
}

LatticeHamiltonian eriksen_fw(LatticeHamiltonian const& h,
                              ParticleParams const& params)
{
    ComplexMatrix const o = odd_part(h, params);
    double const scale = std::max(1.0, max_abs(o));
    double const odd_error = odd_part_error(h, params);
    if (odd_error > odd_part_tolerance * scale)
    {
        std::ostringstream os;
        os << "interaction is not odd: |beta O beta + O| = " << odd_error;
        throw PreconditionError(os.str());
    }
    double const mc2 = params.m() * params.c() * params.c();
    ComplexMatrix o2 = o * o;
    o2 = 0.5 * (o2 + o2.adjoint());
    ComplexMatrix const id = ComplexMatrix::Identity(o2.rows(), o2.cols());

    LatticeHamiltonian out = h;
    out.matrix = beta_matrix(h.lattice.spatial_size())
                 * hermitian_sqrt(mc2 * mc2 * id + o2);
    return out;
}

Eigen::VectorXd sorted_eigenvalues(ComplexMatrix const& m)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m, Eigen::EigenvaluesOnly);
    if (eig.info() != Eigen::Success)
    {
        throw InternalError("eigendecomposition failed");
    }
    Eigen::VectorXd v = eig.eigenvalues();
    std::sort(v.data(), v.data() + v.size());
    return v;
}

double block_diagonality_error(ComplexMatrix const& m)
{
    Eigen::Index const half = m.rows() / 2;
    double const upper = max_abs(m.topRightCorner(half, half));
    double const lower = max_abs(m.bottomLeftCorner(half, half));
    // [beta, H'] has exactly these entries times 2.
    return 2 * std::max(upper, lower);
}

}  // namespace spinfw::qfw
