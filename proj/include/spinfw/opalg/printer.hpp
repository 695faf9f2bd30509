#pragma once

#include <string>

#include <json.hpp>

#include "spinfw/opalg/canonical.hpp"

namespace spinfw::opalg
{

//! "pi1", "B2", "d1d1E3" (derivatives listed before the field).
std::string symbol_text(Symbol const& s);
//! "hbar e c^-1"; empty for the unit monomial.
std::string params_text(Params const& p);
//! "1", "beta", "sigma2", "rho2 sigma1".
std::string slot_text(Slot s);
//! Operator part of a key: "dB3/dx1 pi1^2 pi2" style, "1" when trivial.
std::string monomial_text(Key const& k);

//! One monomial per line, sorted: "+(1/2) hbar e c^-1 [sigma3] B3 pi1".
std::string to_text(CanonicalForm const& a);

/*!
 * [{"coef": {"re": "1/2", "im": "0"}, "params": {"hbar": 1, ...},
 *   "slot": "beta", "field": "B3", "pi": [1, 0, 0]}, ...]
 */
nlohmann::json to_json(CanonicalForm const& a);

}  // namespace spinfw::opalg
