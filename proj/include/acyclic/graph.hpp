#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace acyclic {

using Vertex = int;
using EdgeId = int;

inline constexpr EdgeId kNoEdge = -1;

struct Incidence {
    Vertex neighbor;
    EdgeId edge;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex w) const { return w == u ? v : u; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Edge ids are assigned densely
// in insertion order and survive remove_edge/restore_edge. Adjacency lists
// are kept sorted by neighbor id, so a remove/restore pair leaves the graph
// structurally identical.
class Graph {
public:
    Graph() = default;
    explicit Graph(int num_vertices);

    // Throws InvalidGraph on self-loops, parallel edges or out-of-range ids.
    static Graph from_edges(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

    EdgeId add_edge(Vertex u, Vertex v);

    int num_vertices() const { return static_cast<int>(adjacency_.size()); }
    // Number of edges currently present.
    int num_edges() const { return num_alive_; }
    // Number of edge ids ever assigned (present or removed).
    int edge_capacity() const { return static_cast<int>(edges_.size()); }

    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    int max_degree() const;
    int min_degree() const;
    std::span<const Incidence> neighbors(Vertex v) const { return adjacency_.at(v); }

    const Edge& endpoints(EdgeId e) const;
    bool contains(EdgeId e) const { return e >= 0 && e < edge_capacity() && alive_[e]; }
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    // Ids of present edges in ascending order.
    std::vector<EdgeId> edge_ids() const;

    // UnknownEdge if e is not present.
    void remove_edge(EdgeId e);
    // UnknownEdge if e was never assigned or is already present.
    void restore_edge(EdgeId e);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void link(EdgeId e);
    void unlink(EdgeId e);

    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<Edge> edges_;
    std::vector<char> alive_;
    int num_alive_ = 0;
};

struct DegeneracyDecomposition {
    // Elimination order: every vertex has at most `degeneracy` neighbors
    // appearing later in the order.
    std::vector<Vertex> order;
    int degeneracy = 0;
};

// Exact degeneracy by repeated minimum-degree removal (bucket queue,
// O(n + m)). Ties go to the smallest vertex id.
DegeneracyDecomposition degeneracy(const Graph& g);

bool is_k_degenerate(const Graph& g, int k);

// Number of neighbors later in `order`, per vertex.
std::vector<int> back_degrees(const Graph& g, std::span<const Vertex> order);

struct OrientedEdge {
    Vertex x; // low-degree endpoint
    Vertex y;
    EdgeId edge;

    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

// Edge xy with deg(x) <= k; x is the smallest-id non-isolated vertex of
// degree <= k and y its smallest-id neighbor.
// EmptyGraph if g has no edges, NotKDegenerate if no such x exists.
OrientedEdge find_low_degree_edge(const Graph& g, int k);

// Edge xy with deg(x) <= k such that at most k neighbors of y have degree
// greater than k, and x is a minimum-degree neighbor of y. Candidates y are
// scanned by ascending id; ties among minimum-degree neighbors go to the
// smallest id.
// EmptyGraph if g has no edges, NotKDegenerate if no witness exists.
OrientedEdge find_special_edge(const Graph& g, int k);

// Edge-list text format: one "u v" pair per line, '#' starts a comment
// line, blank lines ignored, LF or CRLF. Vertex count is max id + 1.
// Throws ParseError on malformed input and InvalidGraph on loops/duplicates.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

} // namespace acyclic
