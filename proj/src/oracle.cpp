#include "acyclic/oracle.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <numeric>

namespace acyclic {

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, std::vector<EdgeId> order, int colors)
        : order_(std::move(order)), coloring_(g, colors)
    {
    }

    bool search(std::size_t depth, int max_used)
    {
        ++nodes_;
        if (depth == order_.size()) {
            return true;
        }
        const EdgeId e = order_[depth];
        const ColorSet candidates = candidate_colors(coloring_, e);
        const int limit = std::min(coloring_.palette_size(), max_used + 1);
        for (Color col = 1; col <= limit; ++col) {
            if (!candidates.contains(col) || !is_valid_color(coloring_, e, col)) {
                continue;
            }
            coloring_.assign(e, col);
            if (search(depth + 1, std::max(max_used, col))) {
                return true;
            }
            coloring_.unassign(e);
        }
        return false;
    }

    PartialEdgeColoring& coloring() { return coloring_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::vector<EdgeId> order_;
    PartialEdgeColoring coloring_;
    std::uint64_t nodes_ = 0;
};

} // namespace

OracleResult exact_acyclic_chromatic_index(const Graph& g, int max_colors)
{
    OracleResult result;
    if (g.num_edges() == 0) {
        result.witness = PartialEdgeColoring(g, 0);
        return result;
    }
    std::vector<EdgeId> order = g.edge_ids();
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const auto& ea = g.endpoints(a);
        const auto& eb = g.endpoints(b);
        return g.degree(ea.u) + g.degree(ea.v) > g.degree(eb.u) + g.degree(eb.v);
    });
    for (int colors = g.max_degree(); colors <= max_colors; ++colors) {
        Backtracker bt(g, order, colors);
        const bool found = bt.search(0, 0);
        result.nodes_explored += bt.nodes();
        if (found) {
            result.exact_index = colors;
            result.witness = std::move(bt.coloring());
            return result;
        }
    }
    throw Error(ErrorCode::Exceeded,
        "no acyclic edge coloring with at most " + std::to_string(max_colors) + " colors");
}

ColoringReport verify_coloring(const Graph& g, const PartialEdgeColoring& c, std::optional<int> bound)
{
    ColoringReport report = is_acyclic(g, c);
    report.bound = bound;
    report.within_bound = !bound || report.colors_used <= *bound;
    return report;
}

} // namespace acyclic
