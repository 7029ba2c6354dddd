#include "acyclic/deg3_colorer.hpp"

#include "acyclic/errors.hpp"

#include <array>
#include <functional>
#include <sstream>

namespace acyclic {

Deg3Context build_deg3_context(const Graph& g, const PartialEdgeColoring& c, OrientedEdge xy)
{
    const int palette = c.palette_size();
    Deg3Context ctx;
    ctx.xy = xy;
    ctx.s = ColorSet(palette);
    ctx.high_colors = ColorSet(palette);
    ctx.s_prime = ColorSet(palette);
    ctx.t = ColorSet(palette);
    for (const auto& inc : g.neighbors(xy.y)) {
        if (inc.neighbor == xy.x) {
            continue;
        }
        const bool high = g.degree(inc.neighbor) > 3;
        (high ? ctx.n_high : ctx.n_low).push_back(inc.neighbor);
        if (c.is_colored(inc.edge)) {
            (high ? ctx.high_colors : ctx.s).insert(c.color(inc.edge));
        }
    }
    ctx.r = ColorSet::full(palette) - c.colors_at(xy.x) - c.colors_at(xy.y);
    return ctx;
}

std::optional<Color> is_freeable(const Graph& g, PartialEdgeColoring& c, Vertex y, Vertex y_prime,
    const ColorSet& reserve)
{
    const auto e = g.find_edge(y, y_prime);
    if (!e) {
        throw Error(ErrorCode::UnknownEdge, "yy' is not an edge");
    }
    const Color old = c.color(*e);
    if (old == kNoColor) {
        throw Error(ErrorCode::UncoloredEdge, "yy' must be colored");
    }
    c.unassign(*e);
    std::optional<Color> found;
    try {
        const ColorSet candidates = candidate_colors(c, *e);
        for (Color rho : reserve.to_vector()) {
            if (candidates.contains(rho) && is_valid_color(c, *e, rho)) {
                found = rho;
                break;
            }
        }
    } catch (...) {
        c.assign(*e, old);
        throw;
    }
    c.assign(*e, old);
    return found;
}

void compute_freeable(const Graph& g, PartialEdgeColoring& c, Deg3Context& ctx)
{
    ctx.s_prime = ColorSet(c.palette_size());
    for (Color sigma : ctx.s.to_vector()) {
        const EdgeId e = *c.edge_with_color(ctx.xy.y, sigma);
        const Vertex y_prime = c.endpoints(e).other(ctx.xy.y);
        if (!is_freeable(g, c, ctx.xy.y, y_prime, ctx.r)) {
            ctx.s_prime.insert(sigma);
        }
    }
    ctx.t = ctx.r | (ctx.s - ctx.s_prime);
    ctx.freeable_known = true;
}

namespace {

std::string list(const ColorSet& s)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (Color col : s.to_vector()) {
        os << (first ? "" : ",") << col;
        first = false;
    }
    os << '}';
    return os.str();
}

class Deg3Extender {
public:
    Deg3Extender(const Graph& g, PartialEdgeColoring& c, OrientedEdge xy,
        const ColorerOptions& options, ExtensionStats* stats)
        : g_(g), c_(c), xy_(xy), options_(options), stats_(stats),
          journal_(g, c, options.check_each_mutation)
    {
    }

    bool dispatch(int depth, std::string& label);
    // Structural facts guaranteed by the choice of xy; recoloring never
    // changes them, so they are checked once up front.
    void check_structure();
    RecolorJournal& journal() { return journal_; }
    std::string describe(const std::string& reason) const;

private:
    bool try_direct();
    bool degree_two(const Deg3Context& ctx, std::string& label);
    bool degree_three(Deg3Context& ctx, int depth, std::string& label);
    bool one_in_fy(const Deg3Context& ctx, Color a, Color b, Vertex xa, std::string& label);
    bool both_in_fy(const Deg3Context& ctx, Color alpha, Color beta, Vertex x1, Vertex x2,
        int depth, std::string& label);
    // Moves the edge of y colored zeta to some color of ctx.r, then runs
    // next(). Keeps the first combination for which next() succeeds.
    bool free_then(Color zeta, const Deg3Context& ctx, const std::function<bool()>& next);
    void claim(bool holds, const std::string& what);

    EdgeId edge(Vertex a, Vertex b) const { return *g_.find_edge(a, b); }
    ColorSet full() const { return ColorSet::full(c_.palette_size()); }

    const Graph& g_;
    PartialEdgeColoring& c_;
    OrientedEdge xy_;
    const ColorerOptions& options_;
    ExtensionStats* stats_;
    RecolorJournal journal_;
};

void Deg3Extender::claim(bool holds, const std::string& what)
{
    if (holds) {
        return;
    }
    if (options_.enforce_claims) {
        throw ClaimViolated(describe(what));
    }
    if (stats_ != nullptr) {
        ++stats_->claim_violations;
    }
}

std::string Deg3Extender::describe(const std::string& reason) const
{
    std::ostringstream os;
    os << reason << " at xy=(" << xy_.x << "," << xy_.y << ") deg(x)=" << g_.degree(xy_.x)
       << " deg(y)=" << g_.degree(xy_.y) << " palette=" << c_.palette_size()
       << " F_x=" << list(c_.colors_at(xy_.x)) << " F_y=" << list(c_.colors_at(xy_.y));
    for (const auto& inc : g_.neighbors(xy_.x)) {
        if (inc.neighbor != xy_.y) {
            os << " F_x" << inc.neighbor << "=" << list(c_.colors_at_except(inc.neighbor, inc.edge));
        }
    }
    return os.str();
}

bool Deg3Extender::try_direct()
{
    for (Color col : candidate_colors(c_, xy_.edge).to_vector()) {
        if (journal_.try_assign(xy_.edge, col)) {
            return true;
        }
    }
    return false;
}

bool Deg3Extender::free_then(Color zeta, const Deg3Context& ctx, const std::function<bool()>& next)
{
    const auto e = c_.edge_with_color(xy_.y, zeta);
    if (!e) {
        const auto m = journal_.mark();
        if (next()) {
            return true;
        }
        journal_.rollback(m);
        return false;
    }
    for (Color rho : ctx.r.to_vector()) {
        const auto m = journal_.mark();
        if (journal_.try_recolor(*e, rho) && next()) {
            return true;
        }
        journal_.rollback(m);
    }
    return false;
}

bool Deg3Extender::dispatch(int depth, std::string& label)
{
    if (try_direct()) {
        label += "direct";
        return true;
    }
    Deg3Context ctx = build_deg3_context(g_, c_, xy_);
    switch (g_.degree(xy_.x)) {
    case 2: return degree_two(ctx, label);
    case 3: return degree_three(ctx, depth, label);
    default: return false;
    }
}

void Deg3Extender::check_structure()
{
    const Deg3Context ctx = build_deg3_context(g_, c_, xy_);
    claim(ctx.n_high.size() <= 3, "more than 3 high-degree neighbors of y");
    if (g_.degree(xy_.x) == 3) {
        for (Vertex w : ctx.n_low) {
            claim(g_.degree(w) == 3, "low neighbor of y without degree exactly 3");
        }
    }
}

bool Deg3Extender::degree_two(const Deg3Context& ctx, std::string& label)
{
    Vertex xp = -1;
    for (const auto& inc : g_.neighbors(xy_.x)) {
        if (inc.neighbor != xy_.y) {
            xp = inc.neighbor;
        }
    }
    const EdgeId xxp = edge(xy_.x, xp);
    const Color alpha = c_.color(xxp);
    // alpha missing at y, or alpha in S, always leaves a direct color.
    if (!ctx.high_colors.contains(alpha)) {
        return false;
    }
    const ColorSet blocked = c_.colors_at_except(xp, xxp) | ctx.high_colors;
    for (Color beta : (full() - blocked).to_vector()) {
        const auto m = journal_.mark();
        if (journal_.try_recolor(xxp, beta) && try_direct()) {
            label += "1.2";
            return true;
        }
        journal_.rollback(m);
    }
    return false;
}

bool Deg3Extender::degree_three(Deg3Context& ctx, int depth, std::string& label)
{
    std::array<Vertex, 2> xs{};
    int found = 0;
    for (const auto& inc : g_.neighbors(xy_.x)) {
        if (inc.neighbor != xy_.y) {
            xs[found++] = inc.neighbor;
        }
    }
    const Color alpha = c_.color(edge(xy_.x, xs[0]));
    const Color beta = c_.color(edge(xy_.x, xs[1]));
    // Neither color on a high-degree edge at y: a direct color always exists.
    if (!ctx.high_colors.contains(alpha) && !ctx.high_colors.contains(beta)) {
        return false;
    }

    compute_freeable(g_, c_, ctx);
    const int delta = c_.palette_size() - 5;
    if (stats_ != nullptr) {
        ++stats_->claim_checks;
        stats_->max_non_freeable = std::max(stats_->max_non_freeable, ctx.s_prime.size());
        stats_->note_slack(ctx.t.size() - (delta - 1));
    }
    claim(ctx.s_prime.size() <= 2, "more than 2 non-freeable colors in S");
    claim(ctx.t.size() >= delta - 1, "|T| < Δ - 1");

    const ColorSet fy = c_.colors_at(xy_.y);
    const bool alpha_at_y = fy.contains(alpha);
    const bool beta_at_y = fy.contains(beta);
    if (alpha_at_y && beta_at_y) {
        return both_in_fy(ctx, alpha, beta, xs[0], xs[1], depth, label);
    }
    if (alpha_at_y) {
        return one_in_fy(ctx, alpha, beta, xs[0], label);
    }
    return one_in_fy(ctx, beta, alpha, xs[1], label);
}

bool Deg3Extender::one_in_fy(const Deg3Context& ctx, Color a, Color b, Vertex xa,
    std::string& label)
{
    // Colors of R are already known to be blocked through a; try the
    // freeable colors of S.
    for (Color zeta : (ctx.t - ctx.r).to_vector()) {
        if (free_then(zeta, ctx, [&] { return journal_.try_assign(xy_.edge, zeta); })) {
            label += "2.2.1-free";
            return true;
        }
    }
    const EdgeId xxa = edge(xy_.x, xa);
    ColorSet blocked = c_.colors_at_except(xa, xxa) | ctx.high_colors;
    blocked.insert(b);
    blocked.insert(a);
    for (Color gamma : (full() - blocked).to_vector()) {
        const auto m = journal_.mark();
        if (journal_.try_recolor(xxa, gamma) && try_direct()) {
            label += "2.2.1-recolor";
            return true;
        }
        journal_.rollback(m);
    }
    return false;
}

bool Deg3Extender::both_in_fy(const Deg3Context& ctx, Color alpha, Color beta, Vertex x1,
    Vertex x2, int depth, std::string& label)
{
    for (Color zeta : (ctx.t - ctx.r).to_vector()) {
        if (free_then(zeta, ctx, [&] { return journal_.try_assign(xy_.edge, zeta); })) {
            label += "2.2.2-free";
            return true;
        }
    }
    if (depth >= 2) {
        return false;
    }
    // Keep the color b that sits on a high-degree edge at y and move the
    // other edge at x off F_y, which leaves exactly one color of x in F_y.
    struct Side {
        Color a;
        Vertex xa;
        Color b;
    };
    const std::array<Side, 2> sides{Side{alpha, x1, beta}, Side{beta, x2, alpha}};
    for (const auto& [a, xa, b] : sides) {
        if (!ctx.high_colors.contains(b)) {
            continue;
        }
        const EdgeId xxa = edge(xy_.x, xa);
        const ColorSet at_xa = c_.colors_at_except(xa, xxa);
        ColorSet choices(c_.palette_size());
        if (at_xa.contains(b)) {
            choices = ctx.t - at_xa;
        } else {
            ColorSet blocked = at_xa | ctx.high_colors | ctx.s_prime;
            blocked.insert(b);
            choices = full() - blocked;
        }
        choices.erase(a);
        for (Color gamma : choices.to_vector()) {
            std::string sub;
            auto step = [&] {
                sub.clear();
                return journal_.try_recolor(xxa, gamma) && dispatch(depth + 1, sub);
            };
            if (free_then(gamma, ctx, step)) {
                label += "2.2.2-shift>" + sub;
                return true;
            }
        }
    }
    return false;
}

} // namespace

ExtensionOutcome extend_edge_3deg(const Graph& g, PartialEdgeColoring& c, OrientedEdge xy,
    const ColorerOptions& options, ExtensionStats* stats)
{
    if (!g.contains(xy.edge) || g.endpoints(xy.edge).other(xy.x) != xy.y) {
        throw Error(ErrorCode::UnknownEdge, "xy is not an edge of the current graph");
    }
    if (c.is_colored(xy.edge)) {
        throw Error(ErrorCode::EdgeAlreadyColored, "edge id " + std::to_string(xy.edge));
    }
    const int deg_x = g.degree(xy.x);
    if (deg_x > 3) {
        throw Error(ErrorCode::NotKDegenerate, "deg(x) exceeds 3");
    }
    Deg3Extender extender(g, c, xy, options, stats);
    extender.check_structure();
    std::string label = "deg3:x" + std::to_string(deg_x) + ":";
    if (extender.dispatch(0, label)) {
        return {label, extender.journal().changed_since(0, xy.edge)};
    }
    throw ExtensionFailed(extender.describe("no extension branch applies"));
}

std::vector<OrientedEdge> special_edge_peel(const Graph& g, int k)
{
    Graph h = g;
    std::vector<OrientedEdge> peel;
    peel.reserve(h.num_edges());
    while (h.num_edges() > 0) {
        const OrientedEdge xy = find_special_edge(h, k);
        peel.push_back(xy);
        h.remove_edge(xy.edge);
    }
    return peel;
}

ColoringRun color_graph_3deg(const Graph& g, const ColorerOptions& options)
{
    const int d = degeneracy(g).degeneracy;
    if (d > 3) {
        throw Error(ErrorCode::NotKDegenerate,
            "graph has degeneracy " + std::to_string(d) + " > 3");
    }
    ColoringRun run;
    run.palette = options.palette.value_or(g.max_degree() + 5);
    run.coloring = PartialEdgeColoring(g, run.palette);
    run.peel = special_edge_peel(g, 3);

    Graph h = g;
    for (const auto& xy : run.peel) {
        h.remove_edge(xy.edge);
    }
    for (auto it = run.peel.rbegin(); it != run.peel.rend(); ++it) {
        h.restore_edge(it->edge);
        run.stats.record(extend_edge_3deg(h, run.coloring, *it, options, &run.stats));
    }
    return run;
}

} // namespace acyclic
