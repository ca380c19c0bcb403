#pragma once

// JSON encodings (schema "ybx/1"):
//   LaurentPoly  [[exponent, "coefficient"], ...] ascending by exponent
//   SpectralSum  [{"d": int, "k": int, "p": LaurentPoly}, ...]
//   SBlock       {"eps", "l", "m", "basis_l", "basis_m", "entries": [{"a","b","i","j","value"}]}
// Coefficients are decimal strings so that big integers survive any reader.

#include "json.hpp"
#include "ybx/crystal.hpp"
#include "ybx/smatrix.hpp"
#include "ybx/spectral.hpp"

namespace ybx::io {

using nlohmann::json;

json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

json to_json(const SpectralSum& s);
SpectralSum spectral_from_json(const json& j);

json to_json(const smatrix::SBlock& block);
smatrix::SBlock sblock_from_json(const json& j);

json to_json(const LimitValue& v);

json to_json(const crystal::CombR& r);

}  // namespace ybx::io
