#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ramanujan/expectation_engine.hpp"
#include "ramanujan/matching_family.hpp"
#include "ramanujan/ramanujan_walk.hpp"

namespace ramanujan {

// All JSON uses 1-based vertex indices and exact "num/den" strings for
// polynomial coefficients; no floating point is ever written except timings.

nlohmann::json poly_to_json(const UniPoly<Rational>& p);
UniPoly<Rational> poly_from_json(const nlohmann::json& j);

nlohmann::json node_to_json(const NodeState& node);
// Throws InvalidNode on malformed or inconsistent input.
NodeState node_from_json(const nlohmann::json& j, const Params& params);

nlohmann::json multigraph_to_json(const Multigraph& g);
// Throws std::invalid_argument on malformed input. Regularity is not checked.
Multigraph multigraph_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json ctensor_to_json(const CTensor& ctensor);

// 64-bit FNV-1a over the canonical coefficient strings, as 16 hex digits.
std::string poly_hash(const UniPoly<Rational>& p);

nlohmann::json transcript_to_json(const WalkResult& walk,
                                  const std::optional<Certificate>& certificate);

}  // namespace ramanujan
