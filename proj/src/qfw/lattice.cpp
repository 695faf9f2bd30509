#include "spinfw/qfw/lattice.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "spinfw/core/errors.hpp"
#include "spinfw/core/field_model.hpp"
#include "spinfw/opalg/verify.hpp"

namespace spinfw::qfw
{

namespace
{

using Complex = std::complex<double>;

int max_mode(int sites)
{
    return sites / 2 - 1;
}

// Mode numbers m in (-N/2, N/2], with the Nyquist mode N/2 given k = 0.
Eigen::VectorXd lattice_wavenumbers(int sites, double period)
{
    Eigen::VectorXd k(sites);
    for (int j = 0; j < sites; ++j)
    {
        int m = j <= sites / 2 ? j : j - sites;
        if (m == sites / 2)
        {
            m = 0;
        }
        k[j] = 2 * std::numbers::pi * m / period;
    }
    return k;
}

// p = F^dagger diag(hbar k) F on one axis.
ComplexMatrix momentum_1d(int sites, double period, double hbar)
{
    Eigen::VectorXd const k = lattice_wavenumbers(sites, period);
    double const a = period / sites;
    ComplexMatrix p = ComplexMatrix::Zero(sites, sites);
    for (int n = 0; n < sites; ++n)
    {
        for (int q = 0; q < sites; ++q)
        {
            Complex sum = 0;
            for (int j = 0; j < sites; ++j)
            {
                sum += hbar * k[j] * std::polar(1.0, k[j] * (n - q) * a);
            }
            p(n, q) = sum / static_cast<double>(sites);
        }
    }
    // Exact Hermitian symmetry.
    return 0.5 * (p + p.adjoint());
}

}  // namespace

int LatticeSpec::spatial_size() const
{
    return dimension == 2 ? sites * sites : sites;
}

double LatticeSpec::max_momentum(ParticleParams const& params) const
{
    double const k_max = 2 * std::numbers::pi * max_mode(sites) / period;
    return params.hbar() * k_max * std::sqrt(static_cast<double>(dimension));
}

void LatticeSpec::validate(ParticleParams const& params) const
{
    if (dimension != 1 && dimension != 2)
    {
        throw ConfigurationError("lattice dimension must be 1 or 2");
    }
    if (sites < 8 || sites % 2 != 0)
    {
        throw ConfigurationError("lattice sites per axis must be even and >= 8");
    }
    if (!(period > 0) || !std::isfinite(period))
    {
        throw ConfigurationError("lattice period must be positive");
    }
    if (!(rho > 0) || rho > max_cutoff_ratio)
    {
        std::ostringstream os;
        os << "lattice cutoff ratio rho must lie in (0, " << max_cutoff_ratio
           << "]";
        throw ConfigurationError(os.str());
    }
    double const mc2 = params.m() * params.c() * params.c();
    if (params.c() * max_momentum(params) > rho * mc2 * (1 + 1e-12))
    {
        std::ostringstream os;
        os << "lattice momentum cutoff violated: c|p_max| = "
           << params.c() * max_momentum(params) << " > rho m c^2 = " << rho * mc2
           << "; increase the period or reduce the sites";
        throw ConfigurationError(os.str());
    }
}

LatticeSpec LatticeSpec::with_cutoff(int dimension, int sites, double rho,
                                     ParticleParams const& params)
{
    LatticeSpec out;
    out.dimension = dimension;
    out.sites = sites;
    out.rho = rho;
    double const k_scale = 2 * std::numbers::pi * max_mode(sites)
                           * std::sqrt(static_cast<double>(dimension));
    out.period = params.hbar() * k_scale / (rho * params.m() * params.c());
    return out;
}

LatticeSpec LatticeSpec::default_for(Case c, ParticleParams const& params)
{
    return c == Case::I ? with_cutoff(2, 12, 0.5, params)
                        : with_cutoff(1, 64, 0.5, params);
}

LatticeOperators build_operators(LatticeSpec const& lattice,
                                 ParticleParams const& params)
{
    lattice.validate(params);
    int const n = lattice.sites;
    int const size = lattice.spatial_size();
    ComplexMatrix const p1 = momentum_1d(n, lattice.period, params.hbar());
    LatticeOperators ops;
    ops.axis_momenta = params.hbar() * lattice_wavenumbers(n, lattice.period);
    ops.x.resize(size);
    ops.y = Eigen::VectorXd::Zero(size);
    ops.inversion = ComplexMatrix::Zero(size, size);
    ops.pz = ComplexMatrix::Zero(size, size);
    if (lattice.dimension == 1)
    {
        ops.px = p1;
        ops.py = ComplexMatrix::Zero(size, size);
        for (int i = 0; i < n; ++i)
        {
            ops.x[i] = i * lattice.spacing();
            ops.inversion((n - i) % n, i) = 1;
        }
        return ops;
    }
    // Site index ix + n * iy.
    ops.px = ComplexMatrix::Zero(size, size);
    ops.py = ComplexMatrix::Zero(size, size);
    for (int iy = 0; iy < n; ++iy)
    {
        for (int ix = 0; ix < n; ++ix)
        {
            int const a = ix + n * iy;
            ops.x[a] = ix * lattice.spacing();
            ops.y[a] = iy * lattice.spacing();
            ops.inversion(((n - ix) % n) + n * ((n - iy) % n), a) = 1;
            for (int j = 0; j < n; ++j)
            {
                ops.px(a, j + n * iy) = p1(ix, j);
                ops.py(a, ix + n * j) = p1(iy, j);
            }
        }
    }
    return ops;
}

double field_amplitude(Case c, double lambda, ParticleParams const& params)
{
    double const mc2 = params.m() * params.c() * params.c();
    if (c == Case::I)
    {
        // e hbar B0 / (m c) = lambda m c^2
        return lambda * mc2 * params.m() * params.c()
               / (params.e() * params.hbar());
    }
    return lambda * mc2 / params.mu_prime();
}

ComplexMatrix spinor_kron(Eigen::Matrix4cd const& spinor,
                          ComplexMatrix const& spatial)
{
    Eigen::Index const m = spatial.rows();
    ComplexMatrix out = ComplexMatrix::Zero(4 * m, 4 * m);
    for (int a = 0; a < 4; ++a)
    {
        for (int b = 0; b < 4; ++b)
        {
            if (spinor(a, b) != Complex(0))
            {
                out.block(a * m, b * m, m, m) = spinor(a, b) * spatial;
            }
        }
    }
    return out;
}

double max_abs(ComplexMatrix const& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_error(ComplexMatrix const& m)
{
    return max_abs(m - m.adjoint());
}

ComplexMatrix beta_matrix(int spatial_size)
{
    return spinor_kron(opalg::slot_matrix(opalg::Slot::beta()),
                       ComplexMatrix::Identity(spatial_size, spatial_size));
}

ComplexMatrix particle_block(ComplexMatrix const& m)
{
    Eigen::Index const half = m.rows() / 2;
    return m.topLeftCorner(half, half);
}

LatticeHamiltonian build_hamiltonian(Case c, LatticeSpec const& lattice,
                                     double lambda, ParticleParams const& params)
{
    if (c == Case::I && (params.e() == 0 || params.mu_prime() != 0))
    {
        throw ConfigurationError("case I needs e != 0 and mu' = 0");
    }
    if (c == Case::II && (params.e() != 0 || params.mu_prime() == 0))
    {
        throw ConfigurationError("case II needs e = 0 and mu' != 0");
    }
    if (c == Case::I && lattice.dimension != 2)
    {
        throw ConfigurationError("case I uses a 2D lattice");
    }
    if (c == Case::II && lattice.dimension != 1)
    {
        throw ConfigurationError("case II uses a 1D lattice");
    }
    if (!std::isfinite(lambda))
    {
        throw ConfigurationError("field amplitude must be finite");
    }
    LatticeOperators const ops = build_operators(lattice, params);
    int const size = lattice.spatial_size();
    double const mc2 = params.m() * params.c() * params.c();
    double const amp = field_amplitude(c, lambda, params);

    using opalg::Slot;
    using opalg::slot_matrix;
    ComplexMatrix h = mc2 * beta_matrix(size);
    if (c == Case::I)
    {
        FieldModel const model = SinusoidalMagnetostatic{amp, lattice.period};
        Eigen::VectorXd ay(size);
        for (int a = 0; a < size; ++a)
        {
            ay[a] = sample_field(model, ThreeVector(ops.x[a], ops.y[a], 0)).a.y();
        }
        ComplexMatrix const pi_y
            = ops.py
              - ComplexMatrix((params.e() / params.c()) * ay.cast<Complex>().asDiagonal());
        h += params.c() * spinor_kron(slot_matrix(Slot::alpha_i(0)), ops.px);
        h += params.c() * spinor_kron(slot_matrix(Slot::alpha_i(1)), pi_y);
    }
    else
    {
        FieldModel const model = SinusoidalElectrostatic{amp, lattice.period};
        Eigen::VectorXd ex(size);
        for (int a = 0; a < size; ++a)
        {
            ex[a] = sample_field(model, ThreeVector(ops.x[a], 0, 0)).e.x();
        }
        ComplexMatrix const e_op = ex.cast<Complex>().asDiagonal();
        Eigen::Matrix4cd const beta_alpha
            = slot_matrix(Slot::beta()) * slot_matrix(Slot::alpha_i(0));
        h += params.c() * spinor_kron(slot_matrix(Slot::alpha_i(0)), ops.px);
        h += spinor_kron(Complex(0, params.mu_prime()) * beta_alpha, e_op);
    }
    LatticeHamiltonian out;
    out.matrix = std::move(h);
    out.which = c;
    out.lambda = lambda;
    out.lattice = lattice;
    return out;
}

}  // namespace spinfw::qfw
