#pragma once

#include "acyclic/color_set.hpp"
#include "acyclic/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace acyclic {

// Edge coloring of a subgraph: every edge id of the underlying graph maps to
// a color in 1..palette or to kNoColor. For every vertex the coloring keeps
// an index color -> incident edge, so F_x lookups and bichromatic walks are
// O(1) per step.
//
// assign/recolor keep the coloring proper. force_color exists for loading
// untrusted data and for color exchanges, and may leave it improper; in that
// state is_proper() is false and the path queries throw ImproperColoring.
class PartialEdgeColoring {
public:
    PartialEdgeColoring() = default;
    PartialEdgeColoring(const Graph& g, int palette);
    PartialEdgeColoring(int num_vertices, std::vector<Edge> edges, int palette);

    int palette_size() const { return palette_; }
    int num_vertices() const { return num_vertices_; }
    int num_edges() const { return static_cast<int>(ends_.size()); }
    const Edge& endpoints(EdgeId e) const;

    Color color(EdgeId e) const { return color_.at(e); }
    bool is_colored(EdgeId e) const { return color(e) != kNoColor; }
    int colored_count() const { return colored_; }

    // Throws UnknownEdge, EdgeAlreadyColored, or PropernessViolation when col
    // is outside the palette or already present at an endpoint.
    void assign(EdgeId e, Color col);
    // Throws UncoloredEdge.
    void unassign(EdgeId e);
    // assign after unassign; on PropernessViolation the old color is kept.
    void recolor(EdgeId e, Color col);
    // Sets the color with only a palette-range check (kNoColor uncolors).
    void force_color(EdgeId e, Color col);

    // Edge at v with color col, if any. When the coloring is improper at
    // (v, col) one of the clashing edges is returned.
    std::optional<EdgeId> edge_with_color(Vertex v, Color col) const;
    int count_at(Vertex v, Color col) const;

    // F_v: colors on edges incident to v.
    ColorSet colors_at(Vertex v) const;
    // F_v minus the color of e (e is normally incident to v). For e = uv this
    // is F_uv.
    ColorSet colors_at_except(Vertex v, EdgeId e) const;
    std::vector<EdgeId> colored_edges_at(Vertex v) const { return incident_.at(v); }

    bool is_proper() const { return conflicts_ == 0; }
    // Rebuilds the per-vertex index from the raw assignment and compares.
    bool index_consistent() const;
    int colors_used() const;
    const std::vector<Color>& assignment() const { return color_; }

    friend bool operator==(const PartialEdgeColoring& a, const PartialEdgeColoring& b)
    {
        return a.palette_ == b.palette_ && a.num_vertices_ == b.num_vertices_
            && a.ends_ == b.ends_ && a.color_ == b.color_;
    }

private:
    std::size_t slot(Vertex v, Color col) const
    {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(palette_ + 1)
            + static_cast<std::size_t>(col);
    }
    void check_edge(EdgeId e) const;
    void attach(EdgeId e, Color col);
    void detach(EdgeId e);

    int palette_ = 0;
    int num_vertices_ = 0;
    std::vector<Edge> ends_;
    std::vector<Color> color_;
    std::vector<EdgeId> edge_at_;
    std::vector<std::uint16_t> count_at_;
    std::vector<std::vector<EdgeId>> incident_;
    int conflicts_ = 0;
    int colored_ = 0;
};

// Palette minus (F_u ∪ F_v) for the uncolored edge e = uv.
// Throws EdgeAlreadyColored.
ColorSet candidate_colors(const PartialEdgeColoring& c, EdgeId e);

struct BichromaticPath {
    std::vector<Vertex> vertices;
    // edges[i] joins vertices[i] and vertices[i + 1]; for a cycle the last
    // edge closes back to vertices.front().
    std::vector<EdgeId> edges;
    std::vector<Color> colors;
    Color alpha = kNoColor;
    Color beta = kNoColor;
    bool cycle = false;

    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

enum class PathKind { None, Path, Cycle };

struct BichromaticQuery {
    PathKind kind = PathKind::None;
    BichromaticPath path;
};

// The unique maximal {alpha, beta}-alternating path through v, the
// bicolored cycle through v, or None if v has neither color.
// Throws ImproperColoring if the coloring is not proper, BadSpec if
// alpha == beta.
BichromaticQuery maximal_bichromatic_path(const PartialEdgeColoring& c, Vertex v, Color alpha,
    Color beta);

// True iff the maximal (alpha, gamma)-bichromatic path that starts at u with
// an alpha edge ends at v, also with an alpha edge. u must be an endpoint of
// that path, i.e. carry no gamma edge.
bool exists_critical_path(const PartialEdgeColoring& c, Color alpha, Color gamma, Vertex u,
    Vertex v);

// Lemma-style validity test for the uncolored edge e = uv: a candidate gamma
// is valid iff no eta in F_uv ∩ F_vu admits an (eta, gamma, uv)-critical
// path. Throws NotACandidate when gamma is not a candidate.
bool is_valid_color(const PartialEdgeColoring& c, EdgeId e, Color gamma);

// Candidates of e that pass is_valid_color.
ColorSet valid_colors(const PartialEdgeColoring& c, EdgeId e);

struct ExchangeResult {
    bool proper = false;
    bool valid = false;
};

// Swaps the colors of ua and ub. Always performed; a second exchange with
// the same arguments reverts it. Throws UnknownEdge if ua or ub is missing,
// UncoloredEdge if one of them is uncolored.
ExchangeResult color_exchange(const Graph& g, PartialEdgeColoring& c, Vertex u, Vertex a,
    Vertex b);

struct ColoringReport {
    int num_edges = 0;
    int colored_edges = 0;
    bool total = false;
    bool proper = false;
    bool acyclic = false;
    // Largest degree of any two-color subgraph; <= 2 whenever proper.
    int max_bicolored_degree = 0;
    int palette = 0;
    int colors_used = 0;
    std::optional<int> bound;
    bool within_bound = true;
    std::optional<BichromaticPath> witness;
    // A vertex carrying two edges of the same color, when improper.
    std::optional<std::pair<Vertex, Color>> conflict;

    bool ok() const { return total && proper && acyclic && within_bound; }
};

// Checks properness and absence of bichromatic cycles over the colored edges
// present in g. Only color pairs that meet at some vertex are examined.
ColoringReport is_acyclic(const Graph& g, const PartialEdgeColoring& c);

} // namespace acyclic
