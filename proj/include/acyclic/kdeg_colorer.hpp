#pragma once

#include "acyclic/coloring.hpp"
#include "acyclic/extension.hpp"
#include "acyclic/graph.hpp"

#include <vector>

namespace acyclic {

// ceil((k + 1) * Δ / 2) + 1, in integer arithmetic. Throws KTooSmall for k < 4
// and BadSpec for Δ < 1.
int palette_size_k(int k, int max_degree);

// State around the uncolored edge xy (deg(x) <= k) of the current graph.
struct KdegContext {
    OrientedEdge xy;
    // Neighbors u of x, u != y, whose edge xu shares its color with an edge at y.
    std::vector<Vertex> s;
    // Colors on edges incident on S ∪ {x, y}.
    ColorSet colors_seen;
    // Candidate colors of xy.
    ColorSet c_prime;
    // F_xy ∪ F_yx.
    ColorSet c_dprime;
    // Candidates occurring on exactly one edge incident on N(x) \ {y};
    // each such edge counts once even if both its ends are neighbors of x.
    ColorSet c_star;
    int palette = 0;
};

KdegContext build_kdeg_context(const Graph& g, const PartialEdgeColoring& c, OrientedEdge xy);

// Colors the uncolored edge xy of g, recoloring at most two other edges.
// Branches, in order:
//   "fresh"       a color outside g(E*), always valid;
//   "candidate"   any other valid candidate;
//   "swap"        two S-vertices hold distinct C* colors gamma at x1 and eta
//                 at x2: xx2 <- gamma, then xy <- eta;
//   "double"      gamma outside F_xx' sits at <= 2 neighbors x1, x2 of x:
//                 recolor xx1, xx2 with distinct C* colors, then xy <- gamma.
// Every mutation is checked with the validity test before it is kept.
// Throws ExtensionFailed when no branch applies.
ExtensionOutcome extend_edge_kdeg(const Graph& g, PartialEdgeColoring& c, OrientedEdge xy, int k,
    const ColorerOptions& options = {}, ExtensionStats* stats = nullptr);

// Peel-and-extend acyclic coloring with palette_size_k(k, Δ) colors.
// Throws KTooSmall, NotKDegenerate, ExtensionFailed.
ColoringRun color_graph_kdeg(const Graph& g, int k, const ColorerOptions& options = {});

// Removal order produced by repeatedly taking find_low_degree_edge and
// deleting it, computed incrementally.
std::vector<OrientedEdge> low_degree_peel(const Graph& g, int k);

} // namespace acyclic
