#pragma once

#include <string>

#include "json.hpp"
#include "strata/cartan.hpp"
#include "strata/domain.hpp"
#include "strata/reconstruct.hpp"
#include "strata/spectrum.hpp"

// JSON schemas (all keys always present):
//
//   InvariantTriple       {"rank": int, "real_dim": int, "shilov_dim": int}
//   CartanFactor          {"family": "I".."VI", "params": [int, ...]}
//   Domain                {"expression": str, "factors": [CartanFactor, ...]}
//   StratumPoset          {"domain": str, "ranks": [int], "strata": [[int]],
//                          "weights": [int], "covers": [[lower, upper]],
//                          "labels": [[{"factor": InvariantTriple, "index": int}]]}
//                         covers and labels refer to positions in "strata".
//   ReconstructionReport  {"max_param", "scanned_count", "collisions":
//                          [{"triple", "factors"}], "tube_collisions":
//                          [{"rank", "real_dim", "factors"}],
//                          "round_trip_failures", "tube_violations", "elapsed_ms"}
//   SpectrumSweepReport   {"domains_checked", "automorphisms_checked",
//                          "violations": [str], "elapsed_ms"}

namespace strata {

using nlohmann::json;

void to_json(json& j, const InvariantTriple& t);
void from_json(const json& j, InvariantTriple& t);

void to_json(json& j, const CartanFactor& f);
CartanFactor factor_from_json(const json& j);

void to_json(json& j, const Domain& d);
Domain domain_from_json(const json& j);

void to_json(json& j, const Collision& c);
void to_json(json& j, const TubeCollision& c);
void to_json(json& j, const ReconstructionReport& r);
ReconstructionReport report_from_json(const json& j);

void to_json(json& j, const SpectrumSweepReport& r);

json spectrum_to_json(const StratumPoset& p);

/// Hasse diagram in Graphviz syntax: one node per stratum with identifier
/// "i_1,...,i_s" and label "i_1,...,i_s|weight", one edge per covering pair
/// pointing upward.
std::string spectrum_to_dot(const StratumPoset& p);

}  // namespace strata
