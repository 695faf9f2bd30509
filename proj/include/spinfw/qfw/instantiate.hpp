#pragma once

#include <json.hpp>

#include "spinfw/opalg/canonical.hpp"
#include "spinfw/qfw/correspondence.hpp"

namespace spinfw::qfw
{

/*!
 * Matrix representation of a canonical opalg expression on a lattice:
 * pi_j -> lattice pi_j, B_k -> lattice commutator field, E_k -> sampled field,
 * each derivative d_j -> (i / hbar)[pi_j, .], parameters -> their values.
 */
ComplexMatrix instantiate(opalg::CanonicalForm const& form,
                          SymbolMatrices const& symbols,
                          ParticleParams const& params);

struct OpalgCrossCheck
{
    double lambda{0};
    int order{0};
    std::size_t terms{0};
    //! max |instantiated series - eriksen_fw(H)|
    double difference{0};
    //! mc^2 |C(1/2, N+1)| r^{N+1} / (1 - r), r = spectral radius of O^2/(m^2 c^4)
    double tail_bound{0};
    //! K lambda^2 m c^2 allowance for the dropped nonlinear field terms
    double nonlinear_allowance{0};
    //! max |instantiated series - same truncated series built from O^2|
    double truncated_series_difference{0};

    bool pass() const { return difference <= tail_bound + nonlinear_allowance; }
};

inline constexpr double nonlinear_allowance_factor = 10;

//! Case I at one small amplitude; series_sqrt_expand with unlimited
//! derivative order.
OpalgCrossCheck opalg_crosscheck(LatticeSpec const& lattice,
                                 ParticleParams const& params, double lambda,
                                 int order = 6);

nlohmann::json to_json(OpalgCrossCheck const& c);

}  // namespace spinfw::qfw
