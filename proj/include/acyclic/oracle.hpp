#pragma once

#include "acyclic/coloring.hpp"
#include "acyclic/graph.hpp"

#include <cstdint>
#include <optional>

namespace acyclic {

struct OracleResult {
    // a'(G); 0 for an edgeless graph.
    int exact_index = 0;
    // Total acyclic coloring with palette exact_index.
    PartialEdgeColoring witness;
    std::uint64_t nodes_explored = 0;
};

// Exact acyclic chromatic index by iterative deepening over palette sizes
// Δ, Δ+1, ..., max_colors with backtracking. Edges are taken in order of
// descending endpoint-degree sum; colors are pruned by properness and the
// critical-path validity test, and a color larger than (max used + 1) is
// never tried, which also fixes the first edge to color 1.
// Exponential: intended for roughly n <= 10 or m <= 20.
// Throws Exceeded when no coloring exists within max_colors.
OracleResult exact_acyclic_chromatic_index(const Graph& g, int max_colors);

// Totality, properness, acyclicity (with a witness cycle), distinct colors
// used and compliance with `bound` (colors used <= bound).
ColoringReport verify_coloring(const Graph& g, const PartialEdgeColoring& c,
    std::optional<int> bound = std::nullopt);

} // namespace acyclic
