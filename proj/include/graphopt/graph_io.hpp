// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

#include "graphopt/graph.hpp"

namespace graphopt {

// Text format: first non-comment line "n m", then m lines "u v" with 0-indexed
// endpoints. Lines starting with '#' are comments; blank lines are skipped.

/// Throws MalformedHeader or MalformedEdgeLine; messages carry the 1-based line number.
Graph parse_graph(std::string_view text);

/// Canonical form: header then edges in sorted (min,max) order, LF endings.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace graphopt
