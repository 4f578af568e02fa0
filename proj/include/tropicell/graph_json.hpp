/**
 * JSON form of a graph:
 *   {"vertices":[{"weight":w},...], "edges":[[u,v],...], "markings":[v_1,...,v_n]}
 * with 0-based vertex indices, loops as [u,u] and parallel edges repeated.
 */
#ifndef TROPICELL_GRAPH_JSON_HPP
#define TROPICELL_GRAPH_JSON_HPP

#include <json.hpp>

#include "tropicell/graph.hpp"

namespace tropicell {

nlohmann::json graph_to_json(const MarkedWeightedGraph& graph);

/// Throws GraphError on schema violations.
MarkedWeightedGraph graph_from_json(const nlohmann::json& j);

} // namespace tropicell

#endif
