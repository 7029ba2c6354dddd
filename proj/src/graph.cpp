#include "acyclic/graph.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace acyclic {

Graph::Graph(int num_vertices)
{
    if (num_vertices < 0) {
        throw Error(ErrorCode::InvalidGraph, "negative vertex count");
    }
    adjacency_.resize(num_vertices);
}

Graph Graph::from_edges(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges)
{
    Graph g(num_vertices);
    for (const auto& [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

EdgeId Graph::add_edge(Vertex u, Vertex v)
{
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
        throw Error(ErrorCode::InvalidGraph,
            "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    }
    if (u == v) {
        throw Error(ErrorCode::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    }
    if (find_edge(u, v)) {
        throw Error(ErrorCode::InvalidGraph,
            "parallel edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    const EdgeId e = edge_capacity();
    edges_.push_back({u, v});
    alive_.push_back(0);
    link(e);
    return e;
}

int Graph::max_degree() const
{
    int best = 0;
    for (const auto& adj : adjacency_) {
        best = std::max(best, static_cast<int>(adj.size()));
    }
    return best;
}

int Graph::min_degree() const
{
    if (adjacency_.empty()) {
        return 0;
    }
    int best = static_cast<int>(adjacency_.front().size());
    for (const auto& adj : adjacency_) {
        best = std::min(best, static_cast<int>(adj.size()));
    }
    return best;
}

const Edge& Graph::endpoints(EdgeId e) const
{
    if (e < 0 || e >= edge_capacity()) {
        throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
    }
    return edges_[e];
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const
{
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) {
        return std::nullopt;
    }
    const auto& adj = adjacency_[u];
    auto it = std::lower_bound(adj.begin(), adj.end(), v,
        [](const Incidence& inc, Vertex w) { return inc.neighbor < w; });
    if (it != adj.end() && it->neighbor == v) {
        return it->edge;
    }
    return std::nullopt;
}

std::vector<EdgeId> Graph::edge_ids() const
{
    std::vector<EdgeId> ids;
    ids.reserve(num_alive_);
    for (EdgeId e = 0; e < edge_capacity(); ++e) {
        if (alive_[e]) {
            ids.push_back(e);
        }
    }
    return ids;
}

void Graph::remove_edge(EdgeId e)
{
    if (!contains(e)) {
        throw Error(ErrorCode::UnknownEdge, "cannot remove edge id " + std::to_string(e));
    }
    unlink(e);
}

void Graph::restore_edge(EdgeId e)
{
    if (e < 0 || e >= edge_capacity() || alive_[e]) {
        throw Error(ErrorCode::UnknownEdge, "cannot restore edge id " + std::to_string(e));
    }
    link(e);
}

void Graph::link(EdgeId e)
{
    const auto [u, v] = edges_[e];
    auto insert = [](std::vector<Incidence>& adj, Incidence inc) {
        auto it = std::lower_bound(adj.begin(), adj.end(), inc.neighbor,
            [](const Incidence& a, Vertex w) { return a.neighbor < w; });
        adj.insert(it, inc);
    };
    insert(adjacency_[u], {v, e});
    insert(adjacency_[v], {u, e});
    alive_[e] = 1;
    ++num_alive_;
}

void Graph::unlink(EdgeId e)
{
    const auto [u, v] = edges_[e];
    auto erase = [e](std::vector<Incidence>& adj) {
        std::erase_if(adj, [e](const Incidence& inc) { return inc.edge == e; });
    };
    erase(adjacency_[u]);
    erase(adjacency_[v]);
    alive_[e] = 0;
    --num_alive_;
}

DegeneracyDecomposition degeneracy(const Graph& g)
{
    const int n = g.num_vertices();
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(n, 0);
    DegeneracyDecomposition result;
    result.order.reserve(n);
    while (!queue.empty()) {
        auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        result.degeneracy = std::max(result.degeneracy, d);
        result.order.push_back(v);
        removed[v] = 1;
        for (const auto& inc : g.neighbors(v)) {
            const Vertex w = inc.neighbor;
            if (removed[w]) {
                continue;
            }
            queue.erase({deg[w], w});
            --deg[w];
            queue.emplace(deg[w], w);
        }
    }
    return result;
}

bool is_k_degenerate(const Graph& g, int k)
{
    return degeneracy(g).degeneracy <= k;
}

std::vector<int> back_degrees(const Graph& g, std::span<const Vertex> order)
{
    std::vector<int> position(g.num_vertices(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        position[order[i]] = static_cast<int>(i);
    }
    std::vector<int> later(g.num_vertices(), 0);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (const auto& inc : g.neighbors(v)) {
            if (position[inc.neighbor] > position[v]) {
                ++later[v];
            }
        }
    }
    return later;
}

OrientedEdge find_low_degree_edge(const Graph& g, int k)
{
    if (g.num_edges() == 0) {
        throw Error(ErrorCode::EmptyGraph, "no edges left");
    }
    for (Vertex x = 0; x < g.num_vertices(); ++x) {
        const int d = g.degree(x);
        if (d >= 1 && d <= k) {
            const Incidence& first = g.neighbors(x).front();
            return {x, first.neighbor, first.edge};
        }
    }
    throw Error(ErrorCode::NotKDegenerate,
        "no non-isolated vertex of degree <= " + std::to_string(k));
}

OrientedEdge find_special_edge(const Graph& g, int k)
{
    if (g.num_edges() == 0) {
        throw Error(ErrorCode::EmptyGraph, "no edges left");
    }
    for (Vertex y = 0; y < g.num_vertices(); ++y) {
        const auto adj = g.neighbors(y);
        if (adj.empty()) {
            continue;
        }
        int high = 0;
        const Incidence* best = nullptr;
        for (const auto& inc : adj) {
            const int d = g.degree(inc.neighbor);
            if (d > k) {
                ++high;
            }
            if (best == nullptr || d < g.degree(best->neighbor)) {
                best = &inc;
            }
        }
        if (high <= k && g.degree(best->neighbor) <= k) {
            return {best->neighbor, y, best->edge};
        }
    }
    throw Error(ErrorCode::NotKDegenerate,
        "no edge xy with deg(x) <= " + std::to_string(k) + " and <= " + std::to_string(k)
            + " high-degree neighbors of y");
}

namespace {

bool parse_int(std::string_view token, long long& out)
{
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

} // namespace

Graph read_edge_list(std::istream& in)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    long long max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::string_view view(line);
        const auto start = view.find_first_not_of(" \t");
        if (start == std::string_view::npos) {
            continue;
        }
        view.remove_prefix(start);
        if (view.front() == '#') {
            continue;
        }
        std::vector<std::string_view> tokens;
        while (!view.empty()) {
            const auto end = view.find_first_of(" \t");
            tokens.push_back(view.substr(0, end));
            if (end == std::string_view::npos) {
                break;
            }
            view.remove_prefix(end);
            const auto next = view.find_first_not_of(" \t");
            if (next == std::string_view::npos) {
                break;
            }
            view.remove_prefix(next);
        }
        long long a = 0;
        long long b = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b) || a < 0
            || b < 0 || a > 100'000'000 || b > 100'000'000) {
            throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_no) + ": expected two non-negative integers");
        }
        max_id = std::max({max_id, a, b});
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    return Graph::from_edges(static_cast<int>(max_id + 1), edges);
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "# n=" << g.num_vertices() << " m=" << g.num_edges() << '\n';
    for (EdgeId e : g.edge_ids()) {
        const auto& [u, v] = g.endpoints(e);
        out << u << ' ' << v << '\n';
    }
}

} // namespace acyclic
