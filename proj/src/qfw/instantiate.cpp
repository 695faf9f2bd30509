#include "spinfw/qfw/instantiate.hpp"

#include <cmath>
#include <map>

#include "spinfw/core/errors.hpp"
#include "spinfw/opalg/ordering.hpp"
#include "spinfw/opalg/verify.hpp"
#include "spinfw/qfw/eriksen.hpp"

namespace spinfw::qfw
{

namespace
{

using Complex = std::complex<double>;
using opalg::FieldKind;
using opalg::Symbol;

double param_value(opalg::Params const& p, ParticleParams const& params)
{
    double const values[opalg::param_count]
        = {params.hbar(), params.c(), params.m(), params.e(), params.mu_prime()};
    double out = 1;
    for (int i = 0; i < opalg::param_count; ++i)
    {
        if (p.exp[i] != 0)
        {
            out *= std::pow(values[i], p.exp[i]);
        }
    }
    return out;
}

class Instantiator
{
  public:
    Instantiator(SymbolMatrices const& s, ParticleParams const& params)
        : s_(s), params_(params), size_(s.pi[0].rows())
    {
    }

    ComplexMatrix const& field(Symbol const& sym)
    {
        auto it = fields_.find(sym);
        if (it != fields_.end())
        {
            return it->second;
        }
        ComplexMatrix value;
        if (sym.derivative_order() == 0)
        {
            value = sym.kind == FieldKind::B ? s_.b[sym.comp] : s_.e[sym.comp];
        }
        else
        {
            int j = 0;
            while (sym.d[j] == 0)
            {
                ++j;
            }
            Symbol lower = sym;
            lower.d[j] = static_cast<std::uint8_t>(lower.d[j] - 1);
            value = vanishes(lower) || max_abs(s_.pi[j]) == 0
                        ? ComplexMatrix::Zero(size_, size_)
                        : s_.derivative(j, field(lower), params_.hbar());
        }
        return fields_.emplace(sym, std::move(value)).first->second;
    }

    //! Identically vanishing symbol (in-plane B, d3 on a 2D lattice, ...).
    bool vanishes(Symbol const& sym)
    {
        auto it = zero_.find(sym);
        if (it == zero_.end())
        {
            it = zero_.emplace(sym, max_abs(field(sym)) == 0).first;
        }
        return it->second;
    }

    ComplexMatrix const& pi_power(std::array<std::uint8_t, 3> const& a)
    {
        auto it = powers_.find(a);
        if (it != powers_.end())
        {
            return it->second;
        }
        // pi1^a pi2^b pi3^c = (same with one fewer trailing factor) pi_j
        int j = 2;
        while (j > 0 && a[j] == 0)
        {
            --j;
        }
        ComplexMatrix value;
        if (a[j] == 0)
        {
            value = ComplexMatrix::Identity(size_, size_);
        }
        else if (max_abs(s_.pi[j]) == 0)
        {
            value = ComplexMatrix::Zero(size_, size_);
        }
        else
        {
            auto lower = a;
            --lower[j];
            value = pi_power(lower) * s_.pi[j];
        }
        return powers_.emplace(a, std::move(value)).first->second;
    }

  private:
    SymbolMatrices const& s_;
    ParticleParams const& params_;
    Eigen::Index size_;
    std::map<Symbol, ComplexMatrix> fields_;
    std::map<Symbol, bool> zero_;
    std::map<std::array<std::uint8_t, 3>, ComplexMatrix> powers_;
};

}  // namespace

ComplexMatrix instantiate(opalg::CanonicalForm const& form,
                          SymbolMatrices const& symbols,
                          ParticleParams const& params)
{
    Eigen::Index const size = symbols.pi[0].rows();
    Instantiator inst(symbols, params);
    // Group by (field, slot) so each field matrix multiplies once.
    std::map<std::pair<Symbol, opalg::Slot>, ComplexMatrix> groups;
    for (auto const& [key, coef] : form.sorted())
    {
        if (key.field.is_field() && inst.vanishes(key.field))
        {
            continue;
        }
        Complex const value = Complex(coef.real_value(), coef.imag_value())
                              * param_value(key.params, params);
        auto [it, fresh] = groups.try_emplace({key.field, key.slot});
        if (fresh)
        {
            it->second = ComplexMatrix::Zero(size, size);
        }
        it->second += value * inst.pi_power(key.pi);
    }
    // Sum over fields per slot, then one Kronecker product per slot.
    std::map<opalg::Slot, ComplexMatrix> per_slot;
    for (auto const& [group, spatial] : groups)
    {
        auto [it, fresh] = per_slot.try_emplace(group.second);
        if (fresh)
        {
            it->second = ComplexMatrix::Zero(size, size);
        }
        if (group.first.is_field())
        {
            it->second.noalias() += inst.field(group.first) * spatial;
        }
        else
        {
            it->second += spatial;
        }
    }
    ComplexMatrix out = ComplexMatrix::Zero(4 * size, 4 * size);
    for (auto const& [slot, m] : per_slot)
    {
        out += spinor_kron(opalg::slot_matrix(slot), m);
    }
    return out;
}

OpalgCrossCheck opalg_crosscheck(LatticeSpec const& lattice,
                                 ParticleParams const& params, double lambda,
                                 int order)
{
    if (order < 1)
    {
        throw ConfigurationError("cross-check order must be positive");
    }
    lattice.validate(params);
    LatticeHamiltonian const h = build_hamiltonian(Case::I, lattice, lambda, params);
    LatticeHamiltonian const hp = eriksen_fw(h, params);
    SymbolMatrices const s = build_symbol_matrices(Case::I, lattice, lambda, params);

    opalg::CanonicalForm const series
        = opalg::series_sqrt_expand(Case::I, order, opalg::case_options(Case::I, -1));
    ComplexMatrix const approx = instantiate(series, s, params);

    double const mc2 = params.m() * params.c() * params.c();
    ComplexMatrix const odd = h.matrix - mc2 * beta_matrix(lattice.spatial_size());
    ComplexMatrix const x = odd * odd / (mc2 * mc2);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (x + x.adjoint()),
                                                     Eigen::EigenvaluesOnly);
    double const r = eig.eigenvalues().cwiseAbs().maxCoeff();
    if (r >= 1)
    {
        throw SeriesTruncationError("spectral radius of O^2/(mc^2)^2 is not below 1");
    }

    // beta m c^2 sum_n C(1/2, n) X^n with the exact lattice O^2.
    ComplexMatrix sum = ComplexMatrix::Identity(x.rows(), x.cols());
    ComplexMatrix power = sum;
    for (int n = 1; n <= order; ++n)
    {
        power = power * x;
        sum += binomial_half(n) * power;
    }
    ComplexMatrix const truncated = mc2 * beta_matrix(lattice.spatial_size()) * sum;

    OpalgCrossCheck out;
    out.lambda = lambda;
    out.order = order;
    out.terms = series.size();
    out.difference = max_abs(approx - hp.matrix);
    out.truncated_series_difference = max_abs(approx - truncated);
    out.tail_bound
        = mc2 * std::abs(binomial_half(order + 1)) * std::pow(r, order + 1) / (1 - r);
    out.nonlinear_allowance = nonlinear_allowance_factor * lambda * lambda * mc2;
    return out;
}

nlohmann::json to_json(OpalgCrossCheck const& c)
{
    return {{"lambda", c.lambda},
            {"order", c.order},
            {"terms", c.terms},
            {"difference", c.difference},
            {"tail_bound", c.tail_bound},
            {"nonlinear_allowance", c.nonlinear_allowance},
            {"truncated_series_difference", c.truncated_series_difference},
            {"pass", c.pass()}};
}

}  // namespace spinfw::qfw
