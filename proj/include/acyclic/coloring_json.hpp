#pragma once

#include "acyclic/coloring.hpp"
#include "acyclic/graph.hpp"

#include "json.hpp"

namespace acyclic {

inline constexpr int kSchemaVersion = 1;

// {"schema": 1, "n": N, "palette": p, "edges": [[u, v, color], ...]} with
// edges in id order and color 0 for uncolored edges. Only edges present in
// g are written.
nlohmann::json coloring_to_json(const Graph& g, const PartialEdgeColoring& c);

struct LoadedColoring {
    Graph graph;
    PartialEdgeColoring coloring;
};

// Rebuilds both graph and coloring from the JSON form. Colors are loaded
// as-is, so the result may be improper. Throws ParseError.
LoadedColoring coloring_from_json(const nlohmann::json& j);

// Maps each [u, v, color] entry onto the matching edge of g. Edges of g
// missing from the JSON stay uncolored; entries naming a non-edge throw
// ParseError.
PartialEdgeColoring coloring_from_json(const nlohmann::json& j, const Graph& g);

nlohmann::json report_to_json(const ColoringReport& r);

} // namespace acyclic
