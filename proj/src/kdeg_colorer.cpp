#include "acyclic/kdeg_colorer.hpp"

#include "acyclic/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace acyclic {

int palette_size_k(int k, int max_degree)
{
    if (k < 4) {
        throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " (need k >= 4)");
    }
    if (max_degree < 1) {
        throw Error(ErrorCode::BadSpec, "maximum degree must be positive");
    }
    const long long numerator = static_cast<long long>(k + 1) * max_degree;
    return static_cast<int>((numerator + 1) / 2) + 1;
}

KdegContext build_kdeg_context(const Graph& g, const PartialEdgeColoring& c, OrientedEdge xy)
{
    KdegContext ctx;
    ctx.xy = xy;
    ctx.palette = c.palette_size();
    const ColorSet fx = c.colors_at(xy.x);
    const ColorSet fy = c.colors_at(xy.y);

    ctx.colors_seen = fx | fy;
    for (const auto& inc : g.neighbors(xy.x)) {
        if (inc.neighbor == xy.y || !c.is_colored(inc.edge)) {
            continue;
        }
        if (fy.contains(c.color(inc.edge))) {
            ctx.s.push_back(inc.neighbor);
            ctx.colors_seen |= c.colors_at(inc.neighbor);
        }
    }
    ctx.c_prime = ColorSet::full(ctx.palette) - fx - fy;
    ctx.c_dprime = fx | fy;

    std::set<EdgeId> around;
    for (const auto& inc : g.neighbors(xy.x)) {
        if (inc.neighbor == xy.y) {
            continue;
        }
        for (const auto& far : g.neighbors(inc.neighbor)) {
            if (c.is_colored(far.edge)) {
                around.insert(far.edge);
            }
        }
    }
    std::vector<int> occurrences(ctx.palette + 1, 0);
    for (EdgeId e : around) {
        ++occurrences[c.color(e)];
    }
    ctx.c_star = ColorSet(ctx.palette);
    for (Color col : ctx.c_prime.to_vector()) {
        if (occurrences[col] == 1) {
            ctx.c_star.insert(col);
        }
    }
    return ctx;
}

namespace {

std::string describe(const Graph& g, const PartialEdgeColoring& c, const KdegContext& ctx,
    const std::string& reason)
{
    auto list = [](const ColorSet& s) {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (Color col : s.to_vector()) {
            os << (first ? "" : ",") << col;
            first = false;
        }
        os << '}';
        return os.str();
    };
    std::ostringstream os;
    os << reason << " at xy=(" << ctx.xy.x << "," << ctx.xy.y << ") deg(x)=" << g.degree(ctx.xy.x)
       << " deg(y)=" << g.degree(ctx.xy.y) << " palette=" << ctx.palette
       << " |S|=" << ctx.s.size() << " C'=" << list(ctx.c_prime)
       << " C*=" << list(ctx.c_star) << " F_x=" << list(c.colors_at(ctx.xy.x))
       << " F_y=" << list(c.colors_at(ctx.xy.y));
    return os.str();
}

EdgeId edge_between(const Graph& g, Vertex a, Vertex b)
{
    return *g.find_edge(a, b);
}

} // namespace

ExtensionOutcome extend_edge_kdeg(const Graph& g, PartialEdgeColoring& c, OrientedEdge xy, int k,
    const ColorerOptions& options, ExtensionStats* stats)
{
    if (!g.contains(xy.edge) || g.endpoints(xy.edge).other(xy.x) != xy.y) {
        throw Error(ErrorCode::UnknownEdge, "xy is not an edge of the current graph");
    }
    if (c.is_colored(xy.edge)) {
        throw Error(ErrorCode::EdgeAlreadyColored, "edge id " + std::to_string(xy.edge));
    }
    if (g.degree(xy.x) > k) {
        throw Error(ErrorCode::NotKDegenerate, "deg(x) exceeds k");
    }

    RecolorJournal journal(g, c, options.check_each_mutation);
    const KdegContext ctx = build_kdeg_context(g, c, xy);
    const EdgeId target = xy.edge;

    for (Color col : (ctx.c_prime - ctx.colors_seen).to_vector()) {
        if (journal.try_assign(target, col)) {
            return {"kdeg:fresh", 0};
        }
        if (options.enforce_claims) {
            throw ClaimViolated(describe(g, c, ctx, "color outside g(E*) is not valid"));
        }
        if (stats != nullptr) {
            ++stats->claim_violations;
        }
    }
    for (Color col : (ctx.c_prime & ctx.colors_seen).to_vector()) {
        if (journal.try_assign(target, col)) {
            return {"kdeg:candidate", 0};
        }
    }

    // No candidate is valid. Every candidate is then blocked through a
    // neighbor of x, and the once-occurring ones (C*) are the lever.
    if (stats != nullptr) {
        ++stats->claim_checks;
        stats->note_slack(ctx.c_star.size() - 2);
        if (ctx.c_star.size() < 2) {
            ++stats->claim_violations;
        }
    }

    const Vertex x = xy.x;
    const Vertex y = xy.y;
    for (Vertex x1 : ctx.s) {
        const EdgeId xx1 = edge_between(g, x, x1);
        const Color alpha = c.color(xx1);
        for (Color gamma : (ctx.c_star & c.colors_at_except(x1, xx1)).to_vector()) {
            if (!exists_critical_path(c, alpha, gamma, x, y)) {
                continue;
            }
            for (Vertex x2 : ctx.s) {
                if (x2 == x1) {
                    continue;
                }
                const EdgeId xx2 = edge_between(g, x, x2);
                const ColorSet at_x2 = c.colors_at_except(x2, xx2);
                if (at_x2.contains(gamma)) {
                    continue;
                }
                for (Color eta : (ctx.c_star & at_x2).to_vector()) {
                    const auto m = journal.mark();
                    if (journal.try_recolor(xx2, gamma) && journal.try_assign(target, eta)) {
                        return {"kdeg:swap", journal.changed_since(m, target)};
                    }
                    journal.rollback(m);
                }
            }
        }
    }

    for (Vertex xp : ctx.s) {
        const EdgeId xxp = edge_between(g, x, xp);
        const ColorSet at_xp = c.colors_at_except(xp, xxp);
        for (Color gamma : (ctx.c_prime - at_xp).to_vector()) {
            std::vector<std::pair<Vertex, EdgeId>> holders;
            for (const auto& inc : g.neighbors(x)) {
                if (inc.neighbor == y || inc.neighbor == xp) {
                    continue;
                }
                if (c.colors_at_except(inc.neighbor, inc.edge).contains(gamma)) {
                    holders.emplace_back(inc.neighbor, inc.edge);
                }
            }
            if (holders.empty() || holders.size() > 2) {
                continue;
            }
            ColorSet levers = ctx.c_star;
            levers.erase(gamma);
            const auto lever_list = levers.to_vector();
            for (Color first : lever_list) {
                for (Color second : lever_list) {
                    if (holders.size() == 2 && second == first) {
                        continue;
                    }
                    const auto m = journal.mark();
                    bool ok = journal.try_recolor(holders[0].second, first);
                    if (ok && holders.size() == 2) {
                        ok = journal.try_recolor(holders[1].second, second);
                    }
                    if (ok && journal.try_assign(target, gamma)) {
                        return {"kdeg:double", journal.changed_since(m, target)};
                    }
                    journal.rollback(m);
                    if (holders.size() == 1) {
                        break;
                    }
                }
            }
        }
    }

    throw ExtensionFailed(describe(g, c, ctx, "no extension branch applies"));
}

std::vector<OrientedEdge> low_degree_peel(const Graph& g, int k)
{
    Graph h = g;
    std::set<Vertex> low;
    for (Vertex v = 0; v < h.num_vertices(); ++v) {
        const int d = h.degree(v);
        if (d >= 1 && d <= k) {
            low.insert(v);
        }
    }
    std::vector<OrientedEdge> peel;
    peel.reserve(h.num_edges());
    while (h.num_edges() > 0) {
        if (low.empty()) {
            throw Error(ErrorCode::NotKDegenerate,
                "peeling stalled: every remaining vertex has degree > " + std::to_string(k));
        }
        const Vertex x = *low.begin();
        const Incidence first = h.neighbors(x).front();
        peel.push_back({x, first.neighbor, first.edge});
        h.remove_edge(first.edge);
        for (Vertex v : {x, first.neighbor}) {
            const int d = h.degree(v);
            if (d == 0) {
                low.erase(v);
            } else if (d <= k) {
                low.insert(v);
            }
        }
    }
    return peel;
}

ColoringRun color_graph_kdeg(const Graph& g, int k, const ColorerOptions& options)
{
    if (k < 4) {
        throw Error(ErrorCode::KTooSmall, "k = " + std::to_string(k) + " (need k >= 4)");
    }
    const int d = degeneracy(g).degeneracy;
    if (d > k) {
        throw Error(ErrorCode::NotKDegenerate,
            "graph has degeneracy " + std::to_string(d) + " > k = " + std::to_string(k));
    }
    const int max_deg = g.max_degree();
    ColoringRun run;
    run.palette = options.palette.value_or(max_deg == 0 ? 0 : palette_size_k(k, max_deg));
    run.coloring = PartialEdgeColoring(g, run.palette);
    run.peel = low_degree_peel(g, k);

    Graph h = g;
    for (const auto& xy : run.peel) {
        h.remove_edge(xy.edge);
    }
    for (auto it = run.peel.rbegin(); it != run.peel.rend(); ++it) {
        h.restore_edge(it->edge);
        run.stats.record(extend_edge_kdeg(h, run.coloring, *it, k, options, &run.stats));
    }
    return run;
}

} // namespace acyclic
