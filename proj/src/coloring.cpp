#include "acyclic/coloring.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace acyclic {

PartialEdgeColoring::PartialEdgeColoring(const Graph& g, int palette)
{
    std::vector<Edge> ends;
    ends.reserve(g.edge_capacity());
    for (EdgeId e = 0; e < g.edge_capacity(); ++e) {
        ends.push_back(g.endpoints(e));
    }
    *this = PartialEdgeColoring(g.num_vertices(), std::move(ends), palette);
}

PartialEdgeColoring::PartialEdgeColoring(int num_vertices, std::vector<Edge> edges, int palette)
    : palette_(palette)
    , num_vertices_(num_vertices)
    , ends_(std::move(edges))
    , color_(ends_.size(), kNoColor)
    , edge_at_(static_cast<std::size_t>(num_vertices) * static_cast<std::size_t>(palette + 1),
          kNoEdge)
    , count_at_(edge_at_.size(), 0)
    , incident_(num_vertices)
{
    if (palette < 0 || num_vertices < 0) {
        throw Error(ErrorCode::BadSpec, "negative palette or vertex count");
    }
    for (const auto& [u, v] : ends_) {
        if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices) {
            throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
        }
    }
}

const Edge& PartialEdgeColoring::endpoints(EdgeId e) const
{
    check_edge(e);
    return ends_[e];
}

void PartialEdgeColoring::check_edge(EdgeId e) const
{
    if (e < 0 || e >= num_edges()) {
        throw Error(ErrorCode::UnknownEdge, "edge id " + std::to_string(e));
    }
}

void PartialEdgeColoring::attach(EdgeId e, Color col)
{
    color_[e] = col;
    ++colored_;
    for (Vertex v : {ends_[e].u, ends_[e].v}) {
        const auto s = slot(v, col);
        if (count_at_[s] == 0) {
            edge_at_[s] = e;
        } else if (count_at_[s] == 1) {
            ++conflicts_;
        }
        ++count_at_[s];
        incident_[v].push_back(e);
    }
}

void PartialEdgeColoring::detach(EdgeId e)
{
    const Color col = color_[e];
    color_[e] = kNoColor;
    --colored_;
    for (Vertex v : {ends_[e].u, ends_[e].v}) {
        auto& inc = incident_[v];
        inc.erase(std::find(inc.begin(), inc.end(), e));
        const auto s = slot(v, col);
        --count_at_[s];
        if (count_at_[s] == 0) {
            edge_at_[s] = kNoEdge;
        } else {
            if (count_at_[s] == 1) {
                --conflicts_;
            }
            if (edge_at_[s] == e) {
                for (EdgeId f : inc) {
                    if (color_[f] == col) {
                        edge_at_[s] = f;
                        break;
                    }
                }
            }
        }
    }
}

void PartialEdgeColoring::assign(EdgeId e, Color col)
{
    check_edge(e);
    if (color_[e] != kNoColor) {
        throw Error(ErrorCode::EdgeAlreadyColored, "edge id " + std::to_string(e));
    }
    if (col < 1 || col > palette_) {
        throw Error(ErrorCode::PropernessViolation,
            "color " + std::to_string(col) + " outside palette 1.." + std::to_string(palette_));
    }
    const auto [u, v] = ends_[e];
    if (count_at_[slot(u, col)] != 0 || count_at_[slot(v, col)] != 0) {
        throw Error(ErrorCode::PropernessViolation,
            "color " + std::to_string(col) + " already present at an endpoint of edge "
                + std::to_string(e));
    }
    attach(e, col);
}

void PartialEdgeColoring::unassign(EdgeId e)
{
    check_edge(e);
    if (color_[e] == kNoColor) {
        throw Error(ErrorCode::UncoloredEdge, "edge id " + std::to_string(e));
    }
    detach(e);
}

void PartialEdgeColoring::recolor(EdgeId e, Color col)
{
    const Color old = color(e);
    unassign(e);
    try {
        assign(e, col);
    } catch (...) {
        attach(e, old);
        throw;
    }
}

void PartialEdgeColoring::force_color(EdgeId e, Color col)
{
    check_edge(e);
    if (col < 0 || col > palette_) {
        throw Error(ErrorCode::PropernessViolation,
            "color " + std::to_string(col) + " outside palette 1.." + std::to_string(palette_));
    }
    if (color_[e] != kNoColor) {
        detach(e);
    }
    if (col != kNoColor) {
        attach(e, col);
    }
}

std::optional<EdgeId> PartialEdgeColoring::edge_with_color(Vertex v, Color col) const
{
    if (col < 1 || col > palette_) {
        return std::nullopt;
    }
    const EdgeId e = edge_at_.at(slot(v, col));
    if (e == kNoEdge) {
        return std::nullopt;
    }
    return e;
}

int PartialEdgeColoring::count_at(Vertex v, Color col) const
{
    if (col < 1 || col > palette_) {
        return 0;
    }
    return count_at_.at(slot(v, col));
}

ColorSet PartialEdgeColoring::colors_at(Vertex v) const
{
    ColorSet s(palette_);
    for (EdgeId e : incident_.at(v)) {
        s.insert(color_[e]);
    }
    return s;
}

ColorSet PartialEdgeColoring::colors_at_except(Vertex v, EdgeId e) const
{
    ColorSet s(palette_);
    const Color own = color(e);
    for (EdgeId f : incident_.at(v)) {
        if (f != e) {
            s.insert(color_[f]);
        }
    }
    // A clashing edge of the same color still contributes in improper states.
    if (own != kNoColor && count_at(v, own) <= 1) {
        s.erase(own);
    }
    return s;
}

bool PartialEdgeColoring::index_consistent() const
{
    std::vector<EdgeId> first(edge_at_.size(), kNoEdge);
    std::vector<std::uint16_t> count(edge_at_.size(), 0);
    int colored = 0;
    for (EdgeId e = 0; e < num_edges(); ++e) {
        if (color_[e] == kNoColor) {
            continue;
        }
        ++colored;
        for (Vertex v : {ends_[e].u, ends_[e].v}) {
            ++count[slot(v, color_[e])];
        }
    }
    if (colored != colored_ || count != count_at_) {
        return false;
    }
    for (std::size_t s = 0; s < count.size(); ++s) {
        const EdgeId e = edge_at_[s];
        if ((count[s] == 0) != (e == kNoEdge)) {
            return false;
        }
        if (e != kNoEdge) {
            const auto v = static_cast<Vertex>(s / static_cast<std::size_t>(palette_ + 1));
            const auto col = static_cast<Color>(s % static_cast<std::size_t>(palette_ + 1));
            if (color_[e] != col || (ends_[e].u != v && ends_[e].v != v)) {
                return false;
            }
        }
    }
    for (Vertex v = 0; v < num_vertices_; ++v) {
        std::vector<EdgeId> expected;
        for (EdgeId e = 0; e < num_edges(); ++e) {
            if (color_[e] != kNoColor && (ends_[e].u == v || ends_[e].v == v)) {
                expected.push_back(e);
            }
        }
        auto actual = incident_[v];
        std::sort(actual.begin(), actual.end());
        if (actual != expected) {
            return false;
        }
    }
    int conflicts = 0;
    for (auto k : count) {
        conflicts += k >= 2 ? 1 : 0;
    }
    return conflicts == conflicts_;
}

int PartialEdgeColoring::colors_used() const
{
    ColorSet used(palette_);
    for (Color col : color_) {
        used.insert(col);
    }
    return used.size();
}

ColorSet candidate_colors(const PartialEdgeColoring& c, EdgeId e)
{
    if (c.is_colored(e)) {
        throw Error(ErrorCode::EdgeAlreadyColored, "edge id " + std::to_string(e));
    }
    const auto [u, v] = c.endpoints(e);
    return ColorSet::full(c.palette_size()) - c.colors_at(u) - c.colors_at(v);
}

namespace {

struct Walk {
    std::vector<Vertex> vertices;
    std::vector<EdgeId> edges;
    std::vector<Color> colors;
    bool closed = false;
};

// Follows edges colored first, second, first, ... from start until no edge
// of the wanted color remains or the walk returns to start.
Walk walk_alternating(const PartialEdgeColoring& c, Vertex start, Color first, Color second)
{
    Walk w;
    w.vertices.push_back(start);
    Vertex cur = start;
    Color want = first;
    for (int steps = 0;; ++steps) {
        if (steps > c.num_edges()) {
            throw Error(ErrorCode::ImproperColoring, "alternating walk did not terminate");
        }
        const auto e = c.edge_with_color(cur, want);
        if (!e) {
            break;
        }
        if (!w.edges.empty() && *e == w.edges.back()) {
            break;
        }
        const Vertex next = c.endpoints(*e).other(cur);
        w.edges.push_back(*e);
        w.colors.push_back(want);
        if (next == start) {
            w.closed = true;
            break;
        }
        w.vertices.push_back(next);
        cur = next;
        want = want == first ? second : first;
    }
    return w;
}

void require_proper(const PartialEdgeColoring& c)
{
    if (!c.is_proper()) {
        throw Error(ErrorCode::ImproperColoring, "bichromatic queries need a proper coloring");
    }
}

} // namespace

BichromaticQuery maximal_bichromatic_path(const PartialEdgeColoring& c, Vertex v, Color alpha,
    Color beta)
{
    require_proper(c);
    if (alpha == beta) {
        throw Error(ErrorCode::BadSpec, "bichromatic query needs two distinct colors");
    }
    BichromaticQuery q;
    Walk forward = walk_alternating(c, v, alpha, beta);
    if (forward.closed) {
        q.kind = PathKind::Cycle;
        q.path.vertices = std::move(forward.vertices);
        q.path.edges = std::move(forward.edges);
        q.path.colors = std::move(forward.colors);
        q.path.alpha = alpha;
        q.path.beta = beta;
        q.path.cycle = true;
        return q;
    }
    Walk backward = walk_alternating(c, v, beta, alpha);
    if (forward.edges.empty() && backward.edges.empty()) {
        return q;
    }
    q.kind = PathKind::Path;
    auto& p = q.path;
    p.alpha = alpha;
    p.beta = beta;
    p.vertices.assign(backward.vertices.rbegin(), backward.vertices.rend());
    p.vertices.insert(p.vertices.end(), forward.vertices.begin() + 1, forward.vertices.end());
    p.edges.assign(backward.edges.rbegin(), backward.edges.rend());
    p.edges.insert(p.edges.end(), forward.edges.begin(), forward.edges.end());
    p.colors.assign(backward.colors.rbegin(), backward.colors.rend());
    p.colors.insert(p.colors.end(), forward.colors.begin(), forward.colors.end());
    return q;
}

bool exists_critical_path(const PartialEdgeColoring& c, Color alpha, Color gamma, Vertex u,
    Vertex v)
{
    require_proper(c);
    if (alpha == gamma || c.edge_with_color(u, gamma)) {
        return false;
    }
    const Walk w = walk_alternating(c, u, alpha, gamma);
    return !w.closed && !w.edges.empty() && w.vertices.back() == v && w.colors.back() == alpha;
}

bool is_valid_color(const PartialEdgeColoring& c, EdgeId e, Color gamma)
{
    const ColorSet candidates = candidate_colors(c, e);
    if (!candidates.contains(gamma)) {
        throw Error(ErrorCode::NotACandidate,
            "color " + std::to_string(gamma) + " for edge " + std::to_string(e));
    }
    const auto [u, v] = c.endpoints(e);
    const ColorSet common = c.colors_at(u) & c.colors_at(v);
    for (Color eta : common.to_vector()) {
        if (exists_critical_path(c, eta, gamma, u, v)) {
            return false;
        }
    }
    return true;
}

ColorSet valid_colors(const PartialEdgeColoring& c, EdgeId e)
{
    ColorSet out(c.palette_size());
    for (Color gamma : candidate_colors(c, e).to_vector()) {
        if (is_valid_color(c, e, gamma)) {
            out.insert(gamma);
        }
    }
    return out;
}

ExchangeResult color_exchange(const Graph& g, PartialEdgeColoring& c, Vertex u, Vertex a, Vertex b)
{
    const auto ua = g.find_edge(u, a);
    const auto ub = g.find_edge(u, b);
    if (!ua || !ub) {
        throw Error(ErrorCode::UnknownEdge, "color exchange needs edges ua and ub");
    }
    if (!c.is_colored(*ua) || !c.is_colored(*ub)) {
        throw Error(ErrorCode::UncoloredEdge, "color exchange needs both edges colored");
    }
    const Color ca = c.color(*ua);
    const Color cb = c.color(*ub);
    c.force_color(*ua, kNoColor);
    c.force_color(*ub, kNoColor);
    c.force_color(*ua, cb);
    c.force_color(*ub, ca);
    ExchangeResult r;
    r.proper = c.is_proper();
    r.valid = r.proper && is_acyclic(g, c).acyclic;
    return r;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n), rank_(n, 0)
    {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // False when x and y were already connected.
    bool unite(int x, int y)
    {
        x = find(x);
        y = find(y);
        if (x == y) {
            return false;
        }
        touch(x);
        touch(y);
        if (rank_[x] < rank_[y]) {
            std::swap(x, y);
        }
        parent_[y] = x;
        if (rank_[x] == rank_[y]) {
            ++rank_[x];
        }
        return true;
    }

    void reset()
    {
        for (int x : touched_) {
            parent_[x] = x;
            rank_[x] = 0;
        }
        touched_.clear();
    }

private:
    void touch(int x) { touched_.push_back(x); }

    std::vector<int> parent_;
    std::vector<int> rank_;
    std::vector<int> touched_;
};

// Path from `from` to `to` inside a forest given as adjacency lists.
std::vector<std::pair<Vertex, EdgeId>> forest_path(
    const std::unordered_map<Vertex, std::vector<std::pair<Vertex, EdgeId>>>& forest, Vertex from,
    Vertex to)
{
    std::unordered_map<Vertex, std::pair<Vertex, EdgeId>> parent;
    std::queue<Vertex> frontier;
    frontier.push(from);
    parent[from] = {from, kNoEdge};
    while (!frontier.empty()) {
        const Vertex cur = frontier.front();
        frontier.pop();
        if (cur == to) {
            break;
        }
        auto it = forest.find(cur);
        if (it == forest.end()) {
            continue;
        }
        for (const auto& [next, e] : it->second) {
            if (!parent.contains(next)) {
                parent[next] = {cur, e};
                frontier.push(next);
            }
        }
    }
    std::vector<std::pair<Vertex, EdgeId>> path;
    for (Vertex cur = to; cur != from; cur = parent.at(cur).first) {
        path.emplace_back(cur, parent.at(cur).second);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

ColoringReport is_acyclic(const Graph& g, const PartialEdgeColoring& c)
{
    ColoringReport report;
    const int palette = c.palette_size();
    report.palette = palette;
    report.num_edges = g.num_edges();
    report.proper = true;

    std::vector<std::vector<EdgeId>> by_color(palette + 1);
    ColorSet used(palette);
    for (EdgeId e : g.edge_ids()) {
        if (e < c.num_edges() && c.is_colored(e)) {
            ++report.colored_edges;
            by_color[c.color(e)].push_back(e);
            used.insert(c.color(e));
        }
    }
    report.total = report.colored_edges == report.num_edges;
    report.colors_used = used.size();

    std::unordered_set<std::uint64_t> pairs;
    std::vector<Color> here;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        here.clear();
        for (const auto& inc : g.neighbors(v)) {
            if (inc.edge < c.num_edges() && c.is_colored(inc.edge)) {
                here.push_back(c.color(inc.edge));
            }
        }
        std::sort(here.begin(), here.end());
        // Multiplicities of each color at v, for properness and the two-color degree.
        int top = 0;
        int second = 0;
        for (std::size_t i = 0; i < here.size();) {
            std::size_t j = i;
            while (j < here.size() && here[j] == here[i]) {
                ++j;
            }
            const int mult = static_cast<int>(j - i);
            if (mult > 1 && report.proper) {
                report.proper = false;
                report.conflict = std::make_pair(v, here[i]);
            }
            if (mult > top) {
                second = top;
                top = mult;
            } else if (mult > second) {
                second = mult;
            }
            i = j;
        }
        report.max_bicolored_degree = std::max(report.max_bicolored_degree, top + second);
        here.erase(std::unique(here.begin(), here.end()), here.end());
        for (std::size_t i = 0; i < here.size(); ++i) {
            for (std::size_t j = i + 1; j < here.size(); ++j) {
                pairs.insert((static_cast<std::uint64_t>(here[i]) << 32)
                    | static_cast<std::uint64_t>(here[j]));
            }
        }
    }

    std::vector<std::uint64_t> ordered(pairs.begin(), pairs.end());
    std::sort(ordered.begin(), ordered.end());
    DisjointSets sets(g.num_vertices());
    report.acyclic = true;
    for (std::uint64_t key : ordered) {
        const auto alpha = static_cast<Color>(key >> 32);
        const auto beta = static_cast<Color>(key & 0xffffffffU);
        std::unordered_map<Vertex, std::vector<std::pair<Vertex, EdgeId>>> forest;
        std::vector<EdgeId> edges = by_color[alpha];
        edges.insert(edges.end(), by_color[beta].begin(), by_color[beta].end());
        std::sort(edges.begin(), edges.end());
        for (EdgeId e : edges) {
            const auto [u, v] = g.endpoints(e);
            if (!sets.unite(u, v)) {
                BichromaticPath cycle;
                cycle.alpha = alpha;
                cycle.beta = beta;
                cycle.cycle = true;
                cycle.vertices.push_back(u);
                for (const auto& [w, f] : forest_path(forest, u, v)) {
                    cycle.vertices.push_back(w);
                    cycle.edges.push_back(f);
                    cycle.colors.push_back(c.color(f));
                }
                cycle.edges.push_back(e);
                cycle.colors.push_back(c.color(e));
                report.acyclic = false;
                report.witness = std::move(cycle);
                break;
            }
            forest[u].emplace_back(v, e);
            forest[v].emplace_back(u, e);
        }
        sets.reset();
        if (!report.acyclic) {
            break;
        }
    }
    return report;
}

} // namespace acyclic
