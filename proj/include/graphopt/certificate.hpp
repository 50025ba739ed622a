// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graphopt/cuts.hpp"
#include "graphopt/heuristics.hpp"
#include "graphopt/reductions.hpp"
#include "graphopt/rewiring.hpp"

// JSON views of results. Keys are sorted and exact rationals are "p/q" strings, so equal
// values always serialize to identical bytes.
namespace graphopt {

using Json = nlohmann::json;

Json edges_to_json(const std::vector<Edge>& edges);
Json edit_set_to_json(const EditSet& edits);
Json cut_to_json(const Cut& cut);
/// {"answer", "witness": {"add", "remove"} | null, "value", "objective"}
Json decision_to_json(const Decision& d);

Json certificate_to_json(const ReductionCertificate& cert);
/// Rebuilds the reduction from the instance, seed, embedding parameters and configured
/// constants stored in a certificate. Throws InvalidArgument on missing fields.
ReductionSkeleton skeleton_from_json(const Json& j);

/// Field-level differences as "path: expected -> actual" lines.
std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path = "");

/// Pretty JSON followed by a newline.
std::string dump(const Json& j);

}  // namespace graphopt
