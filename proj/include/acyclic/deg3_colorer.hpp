#pragma once

#include "acyclic/coloring.hpp"
#include "acyclic/extension.hpp"
#include "acyclic/graph.hpp"

#include <optional>
#include <vector>

namespace acyclic {

// State around the uncolored special edge xy of the current graph.
struct Deg3Context {
    OrientedEdge xy;
    // Neighbors of y other than x with degree <= 3, resp. > 3.
    std::vector<Vertex> n_low;
    std::vector<Vertex> n_high;
    // Colors at y except those on edges to n_high.
    ColorSet s;
    // Colors at y on edges to n_high (F_y \ S).
    ColorSet high_colors;
    // palette \ (F_xy ∪ F_yx): the candidate colors of xy.
    ColorSet r;
    // Filled by compute_freeable: colors of S that cannot be moved into R,
    // and T = R ∪ (S \ S').
    ColorSet s_prime;
    ColorSet t;
    bool freeable_known = false;
};

Deg3Context build_deg3_context(const Graph& g, const PartialEdgeColoring& c, OrientedEdge xy);

// Smallest rho in `reserve` such that recoloring yy' to rho keeps the
// coloring proper and acyclic, or nullopt. The coloring is restored before
// returning.
std::optional<Color> is_freeable(const Graph& g, PartialEdgeColoring& c, Vertex y, Vertex y_prime,
    const ColorSet& reserve);

void compute_freeable(const Graph& g, PartialEdgeColoring& c, Deg3Context& ctx);

// Colors the uncolored special edge xy (as returned by find_special_edge
// with k = 3) following the case analysis on deg(x):
//   1       any color missing at y;
//   2       direct, else move xx' off F_y \ S and retry;
//   3       direct; otherwise free a color of S or recolor xx1 and re-enter
//           the dispatcher with a rebuilt context.
// With enforce_claims, ClaimViolated is thrown when |N''(y)| > 3, a low
// neighbor of y has degree != 3 while deg(x) = 3, |S'| > 2 or |T| < Δ - 1
// (Δ taken as palette - 5). Throws ExtensionFailed if no branch applies.
ExtensionOutcome extend_edge_3deg(const Graph& g, PartialEdgeColoring& c, OrientedEdge xy,
    const ColorerOptions& options = {}, ExtensionStats* stats = nullptr);

// Peel with find_special_edge(k = 3), restore in reverse, extend each edge.
// Palette Δ + 5. Throws NotKDegenerate (degeneracy > 3), ExtensionFailed.
ColoringRun color_graph_3deg(const Graph& g, const ColorerOptions& options = {});

std::vector<OrientedEdge> special_edge_peel(const Graph& g, int k);

} // namespace acyclic
