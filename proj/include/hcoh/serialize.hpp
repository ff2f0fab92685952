#pragma once

// JSON forms:
//   scalar          [c0, c1, ..]            k integers, constant term first
//   algebra element [scalar, ..]            n scalars
//   cochain         [[[i, j], k, scalar], ..] nonzero terms, 1-based
//   pair            {"phi": cochain, "omega": [algebra element, ..]}
//   verdict         {"space", "predicted_dim", "computed_dim", "pass", "diagnostics"}
//   deformation     {"bracket": [[i, j, k, c0, c1], ..], "pmap": [[i, k, c0, c1], ..]}

#include <json.hpp>

#include "hcoh/deformation.hpp"
#include "hcoh/theorems.hpp"

namespace hcoh::io {

using nlohmann::json;

json scalar_to_json(const Field& f, Elem a);
/// Also accepts a bare integer. Throws Errc::parse_error.
Elem scalar_from_json(const Field& f, const json& j);

json element_to_json(const Field& f, const AlgebraElement& x);
AlgebraElement element_from_json(const Heisenberg& h, const json& j);

json cochain_to_json(const Heisenberg& h, const Cochain& c);
Cochain cochain_from_json(const Heisenberg& h, int degree, const json& j);

json pair_to_json(const Heisenberg& h, const CompatiblePair& pair);
CompatiblePair pair_from_json(const Heisenberg& h, const json& j);

json verdict_to_json(const Verdict& v);

/// Nonzero structure constants of the deformed bracket (i < j) and p-map.
json deformation_to_json(const DualDeformation& d);

json axioms_to_json(const AxiomReport& r);

}  // namespace hcoh::io
