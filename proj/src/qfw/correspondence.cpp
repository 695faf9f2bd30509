#include "spinfw/qfw/correspondence.hpp"

#include <cmath>
#include <sstream>

#include "spinfw/core/errors.hpp"
#include "spinfw/core/field_model.hpp"
#include "spinfw/core/types.hpp"
#include "spinfw/opalg/verify.hpp"

namespace spinfw::qfw
{

namespace
{

using Complex = std::complex<double>;

ComplexMatrix commutator(ComplexMatrix const& a, ComplexMatrix const& b)
{
    return a * b - b * a;
}

bool is_zero(ComplexMatrix const& m)
{
    return max_abs(m) == 0;
}

Eigen::Matrix4cd slot(opalg::Slot s)
{
    return opalg::slot_matrix(s);
}

}  // namespace

double binomial_half(int n)
{
    double out = 1;
    for (int k = 0; k < n; ++k)
    {
        out *= (0.5 - k) / (k + 1);
    }
    return out;
}

double binomial_minus_half(int n)
{
    double out = 1;
    for (int k = 0; k < n; ++k)
    {
        out *= (-0.5 - k) / (k + 1);
    }
    return out;
}

SeriesCoefficients inverse_gamma_series()
{
    return [](int n) { return binomial_minus_half(n); };
}

SeriesCoefficients inverse_gamma_gamma_plus_one_series()
{
    // 1/(g(g+1)) = (1 - 1/g) / x
    return [](int n) { return -binomial_minus_half(n + 1); };
}

SeriesCoefficients inverse_gamma_plus_one_series()
{
    // 1/(g+1) = (g - 1) / x
    return [](int n) { return binomial_half(n + 1); };
}

WeylCalculus::WeylCalculus(ComplexMatrix const& pi_squared,
                           ParticleParams const& params)
{
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(pi_squared);
    if (eig.info() != Eigen::Success)
    {
        throw InternalError("eigendecomposition of pi^2 failed");
    }
    vectors_ = eig.eigenvectors();
    values_ = eig.eigenvalues();
    double const mc = params.m() * params.c();
    scaled_ = values_ / (mc * mc);
    radius_ = scaled_.cwiseAbs().maxCoeff();
}

ComplexMatrix WeylCalculus::apply(ComplexMatrix const& x,
                                  SeriesCoefficients const& g,
                                  WeylSeriesInfo* info) const
{
    if (radius_ >= 1)
    {
        std::ostringstream os;
        os << "Weyl series diverges: spectral radius of pi^2/(mc)^2 is "
           << radius_ << "; use a larger mass or smaller lattice momenta";
        throw SeriesTruncationError(os.str());
    }
    // Smallest N with G r^{N+1} / (1 - r) below tolerance, G = max |g_n| seen.
    double bound = 0;
    int terms = 0;
    double power = radius_;
    double tail = 0;
    for (int n = 0;; ++n)
    {
        bound = std::max(bound, std::abs(g(n)));
        tail = bound * power / (1 - radius_);
        if (tail < weyl_tail_tolerance && n >= 1)
        {
            terms = n + 1;
            break;
        }
        if (n + 1 >= weyl_max_terms)
        {
            std::ostringstream os;
            os << "Weyl series needs more than " << weyl_max_terms
               << " terms (spectral radius " << radius_
               << "); use a larger mass or smaller lattice momenta";
            throw SeriesTruncationError(os.str());
        }
        power *= radius_;
    }
    // The bound must also hold for the coefficients beyond the cut.
    for (int n = terms; n < terms + 64; ++n)
    {
        if (std::abs(g(n)) > bound * (1 + 1e-12))
        {
            throw SeriesTruncationError("Weyl series coefficients not bounded");
        }
    }

    std::vector<double> coef(terms);
    for (int n = 0; n < terms; ++n)
    {
        coef[n] = g(n);
    }
    Eigen::Index const size = scaled_.size();
    ComplexMatrix rotated = vectors_.adjoint() * x * vectors_;
    for (Eigen::Index b = 0; b < size; ++b)
    {
        double const xb = scaled_[b];
        for (Eigen::Index a = 0; a < size; ++a)
        {
            double const xa = scaled_[a];
            // S_n = sum_l xa^l xb^(n-l), S_n = xb S_{n-1} + xa^n
            double s = 1;
            double xa_n = 1;
            double kernel = coef[0];
            for (int n = 1; n < terms; ++n)
            {
                xa_n *= xa;
                s = xb * s + xa_n;
                kernel += coef[n] * s / (n + 1);
            }
            rotated(a, b) *= kernel;
        }
    }
    if (info != nullptr)
    {
        info->terms = std::max(info->terms, terms);
        info->spectral_radius = radius_;
        info->tail_bound = std::max(info->tail_bound, tail);
    }
    return vectors_ * rotated * vectors_.adjoint();
}

ComplexMatrix WeylCalculus::function(std::function<double(double)> const& f) const
{
    Eigen::VectorXd mapped(values_.size());
    for (Eigen::Index i = 0; i < values_.size(); ++i)
    {
        mapped[i] = f(values_[i]);
    }
    return vectors_ * mapped.cast<Complex>().asDiagonal() * vectors_.adjoint();
}

ComplexMatrix SymbolMatrices::derivative(int j, ComplexMatrix const& f,
                                         double hbar) const
{
    return Complex(0, 1 / hbar) * commutator(pi[j], f);
}

SymbolMatrices build_symbol_matrices(Case c, LatticeSpec const& lattice,
                                     double lambda, ParticleParams const& params)
{
    LatticeOperators const ops = build_operators(lattice, params);
    int const size = lattice.spatial_size();
    ComplexMatrix const zero = ComplexMatrix::Zero(size, size);
    double const amp = field_amplitude(c, lambda, params);

    FieldModel model;
    if (c == Case::I)
    {
        model = SinusoidalMagnetostatic{amp, lattice.period};
    }
    else
    {
        model = SinusoidalElectrostatic{amp, lattice.period};
    }
    Eigen::VectorXd ay(size), ex(size), phi(size);
    for (int a = 0; a < size; ++a)
    {
        FieldSample const f = sample_field(model, ThreeVector(ops.x[a], ops.y[a], 0));
        ay[a] = f.a.y();
        ex[a] = f.e.x();
        phi[a] = f.phi;
    }

    SymbolMatrices s;
    s.pi = {ops.px,
            ops.py
                - ComplexMatrix((params.e() / params.c())
                                * ay.cast<Complex>().asDiagonal()),
            ops.pz};
    s.e = {ComplexMatrix(ex.cast<Complex>().asDiagonal()), zero, zero};
    s.phi = phi.cast<Complex>().asDiagonal();
    for (int k = 0; k < 3; ++k)
    {
        s.b[k] = zero;
    }
    if (params.e() != 0)
    {
        // [pi_i, pi_j] = i (hbar e / c) eps_ijk B_k
        Complex const scale = params.c() / (Complex(0, 1) * params.hbar() * params.e());
        s.b[0] = scale * commutator(s.pi[1], s.pi[2]);
        s.b[1] = scale * commutator(s.pi[2], s.pi[0]);
        s.b[2] = scale * commutator(s.pi[0], s.pi[1]);
    }
    s.div_e = zero;
    for (int j = 0; j < 3; ++j)
    {
        s.div_e += s.derivative(j, s.e[j], params.hbar());
    }
    s.pi_squared = zero;
    for (int j = 0; j < 3; ++j)
    {
        s.pi_squared += s.pi[j] * s.pi[j];
    }
    s.pi_squared = 0.5 * (s.pi_squared + s.pi_squared.adjoint());
    return s;
}

double darwin_coefficient(ParticleParams const& params)
{
    double const mc = params.m() * params.c();
    return params.hbar() * params.hbar() / (4 * mc)
           * (3 * params.e() / (2 * mc) - params.gamma_m());
}

LatticeHamiltonian build_correspondence(Case c, LatticeSpec const& lattice,
                                        double lambda, ParticleParams const& params,
                                        bool include_darwin)
{
    CorrespondenceOptions options;
    options.include_darwin = include_darwin;
    return build_correspondence(c, lattice, lambda, params, options);
}

LatticeHamiltonian build_correspondence(Case c, LatticeSpec const& lattice,
                                        double lambda, ParticleParams const& params,
                                        CorrespondenceOptions const& options,
                                        WeylSeriesInfo* info)
{
    lattice.validate(params);
    SymbolMatrices const s = build_symbol_matrices(c, lattice, lambda, params);
    int const size = lattice.spatial_size();
    WeylCalculus const weyl(s.pi_squared, params);

    double const hbar = params.hbar();
    double const mc = params.m() * params.c();
    double const mc2 = mc * params.c();
    double const gm = params.gamma_m();
    double const em = params.e() / mc;

    using opalg::Slot;
    ComplexMatrix const kinetic = weyl.function(
        [&](double p2) { return std::sqrt(params.c() * params.c() * p2 + mc2 * mc2); });
    ComplexMatrix h = spinor_kron(slot(Slot::beta()), kinetic);
    if (params.e() != 0 && !is_zero(s.phi))
    {
        h += spinor_kron(Eigen::Matrix4cd::Identity(), params.e() * s.phi);
    }

    // (gamma_m - e/mc + (e/mc)/gamma) B
    SeriesCoefficients const g_b = [gm, em](int n) {
        return (n == 0 ? gm - em : 0.0) + em * binomial_minus_half(n);
    };
    // gamma_m / gamma - (e/mc) / (gamma + 1)
    SeriesCoefficients const g_e = [gm, em](int n) {
        return gm * binomial_minus_half(n) - em * binomial_half(n + 1);
    };

    // (pi.B + B.pi)
    ComplexMatrix dot_sym = ComplexMatrix::Zero(size, size);
    for (int j = 0; j < 3; ++j)
    {
        dot_sym += s.pi[j] * s.b[j] + s.b[j] * s.pi[j];
    }
    for (int i = 0; i < 3; ++i)
    {
        Eigen::Matrix4cd const beta_sigma = slot(Slot::beta()) * slot(Slot::sigma_i(i));
        if (!is_zero(s.b[i]))
        {
            h += spinor_kron(-hbar / 2 * beta_sigma, weyl.apply(s.b[i], g_b, info));
        }
        ComplexMatrix const pbp
            = 0.25 * (dot_sym * s.pi[i] + s.pi[i] * dot_sym);
        if (gm != em && !is_zero(pbp))
        {
            h += spinor_kron(hbar / 2 * (gm - em) / (mc * mc) * beta_sigma,
                             weyl.apply(pbp, inverse_gamma_gamma_plus_one_series(),
                                        info));
        }
        // (pi x E)-bar_i = 1/2 (pi x E - E x pi)_i
        ComplexMatrix cross_sym = ComplexMatrix::Zero(size, size);
        for (int j = 0; j < 3; ++j)
        {
            for (int k = 0; k < 3; ++k)
            {
                int const eps = levi_civita(i, j, k);
                if (eps != 0)
                {
                    cross_sym += 0.5 * eps * (s.pi[j] * s.e[k] - s.e[j] * s.pi[k]);
                }
            }
        }
        if (!is_zero(cross_sym))
        {
            // -beta (hbar/2) sigma . (-beta ...) = + (hbar/2) sigma . (...)
            h += spinor_kron(hbar / (2 * mc) * slot(Slot::sigma_i(i)),
                             weyl.apply(cross_sym, g_e, info));
        }
    }

    LatticeHamiltonian out;
    if (options.include_darwin && !is_zero(s.div_e))
    {
        if (options.darwin_form == DarwinForm::WeylInverseGamma)
        {
            out.darwin_coefficient = darwin_coefficient(params);
            h += spinor_kron(Eigen::Matrix4cd::Identity(),
                             out.darwin_coefficient
                                 * weyl.apply(s.div_e, inverse_gamma_series(), info));
        }
        else
        {
            out.darwin_coefficient = options.classical_coefficient;
            h += spinor_kron(Eigen::Matrix4cd::Identity(),
                             options.classical_coefficient * s.div_e);
        }
    }
    else if (options.include_darwin)
    {
        out.darwin_coefficient = darwin_coefficient(params);
    }
    out.matrix = std::move(h);
    out.which = c;
    out.lambda = lambda;
    out.lattice = lattice;
    return out;
}

}  // namespace spinfw::qfw
