#include "support/brute.hpp"

#include "acyclic/errors.hpp"
#include "acyclic/generator.hpp"
#include "acyclic/kdeg_colorer.hpp"
#include "acyclic/oracle.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace acyclic;

namespace {

struct Fixture {
    Graph graph;
    PartialEdgeColoring coloring;
    OrientedEdge xy;
};

// Colors are listed per edge id; edge 0 is xy and stays uncolored.
Fixture fixture(int n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<Color> colors,
    int palette)
{
    Fixture f{Graph::from_edges(n, edges), {}, {}};
    f.coloring = PartialEdgeColoring(f.graph, palette);
    for (std::size_t e = 0; e < colors.size(); ++e) {
        if (colors[e] != kNoColor) {
            f.coloring.assign(static_cast<EdgeId>(e), colors[e]);
        }
    }
    f.xy = {edges[0].first, edges[0].second, 0};
    return f;
}

// x = 0, y = 1. x1 = 2 and x2 = 3 both lie in S; candidates 3 and 4 are
// blocked by the critical paths 0-2-4-1 (colors 1,3,1) and 0-3-5-1
// (colors 2,4,2).
Fixture swap_instance()
{
    return fixture(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 4}, {3, 5}},
        {kNoColor, 1, 2, 1, 2, 3, 4}, 4);
}

// x = 0, y = 1, x' = 2, x1 = 3, x2 = 4. Both once-occurring candidates sit
// at x', so no swap exists; candidate 6 sits at x1 and x2 only.
Fixture double_instance()
{
    return fixture(10,
        {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 7}, {7, 8}, {5, 8}, {3, 6},
            {4, 9}},
        {kNoColor, 1, 2, 5, 1, 2, 3, 4, 1, 4, 6, 6}, 6);
}

Graph relabel(const Graph& g, Rng& rng)
{
    std::vector<Vertex> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    Graph h(g.num_vertices());
    for (EdgeId e : g.edge_ids()) {
        h.add_edge(perm[g.endpoints(e).u], perm[g.endpoints(e).v]);
    }
    return h;
}

} // namespace

TEST(PaletteSize, Formula)
{
    EXPECT_EQ(palette_size_k(4, 10), 26);
    EXPECT_EQ(palette_size_k(5, 7), 22);
    EXPECT_EQ(palette_size_k(4, 1), 4);
    EXPECT_EQ(palette_size_k(8, 3), 15);
    EXPECT_THROW(palette_size_k(3, 5), Error);
    EXPECT_THROW(palette_size_k(4, 0), Error);
}

TEST(KdegColorer, K5)
{
    const Graph k5 = make_family({Family::Complete, 5, 1, 0, Attachment::Uniform});
    const ColoringRun run = color_graph_kdeg(k5, 4);
    EXPECT_EQ(run.palette, 11);
    const auto report = verify_coloring(k5, run.coloring, 11);
    EXPECT_TRUE(report.ok());
    EXPECT_GE(run.coloring.colors_used(), exact_acyclic_chromatic_index(k5, 9).exact_index);
}

TEST(KdegColorer, EmptyGraph)
{
    const ColoringRun run = color_graph_kdeg(Graph(4), 4);
    EXPECT_EQ(run.coloring.colored_count(), 0);
    EXPECT_TRUE(run.peel.empty());
    EXPECT_TRUE(verify_coloring(Graph(4), run.coloring).ok());
}

TEST(KdegColorer, RejectsBadInput)
{
    const Graph k6 = make_family({Family::Complete, 6, 1, 0, Attachment::Uniform});
    try {
        color_graph_kdeg(k6, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotKDegenerate);
    }
    try {
        color_graph_kdeg(k6, 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::KTooSmall);
    }
}

TEST(KdegExtension, LastEdgeOfStarTakesFreshColor)
{
    Graph star = make_family({Family::Star, 7, 1, 0, Attachment::Uniform});
    PartialEdgeColoring c(star, palette_size_k(4, 6));
    for (EdgeId e = 0; e < 5; ++e) {
        c.assign(e, e + 1);
    }
    const auto outcome = extend_edge_kdeg(star, c, {6, 0, 5}, 4);
    EXPECT_EQ(outcome.branch, "kdeg:fresh");
    EXPECT_EQ(outcome.recolored, 0);
    EXPECT_EQ(c.color(5), 6);
    EXPECT_TRUE(verify_coloring(star, c).ok());
}

TEST(KdegExtension, ContextOfSwapInstance)
{
    const Fixture f = swap_instance();
    ASSERT_TRUE(is_acyclic(f.graph, f.coloring).acyclic);
    const KdegContext ctx = build_kdeg_context(f.graph, f.coloring, f.xy);
    EXPECT_EQ(ctx.s, (std::vector<Vertex>{2, 3}));
    EXPECT_EQ(ctx.c_prime.to_vector(), (std::vector<Color>{3, 4}));
    EXPECT_EQ(ctx.c_dprime.to_vector(), (std::vector<Color>{1, 2}));
    EXPECT_EQ(ctx.c_star.to_vector(), (std::vector<Color>{3, 4}));
    EXPECT_TRUE(valid_colors(f.coloring, 0).empty());
}

TEST(KdegExtension, SwapBranch)
{
    Fixture f = swap_instance();
    ExtensionStats stats;
    ColorerOptions options;
    options.check_each_mutation = true;
    const auto outcome = extend_edge_kdeg(f.graph, f.coloring, f.xy, 4, options, &stats);
    EXPECT_EQ(outcome.branch, "kdeg:swap");
    EXPECT_EQ(outcome.recolored, 1);
    // xx2 takes gamma = 3 and xy takes eta = 4.
    EXPECT_EQ(f.coloring.color(2), 3);
    EXPECT_EQ(f.coloring.color(0), 4);
    EXPECT_TRUE(verify_coloring(f.graph, f.coloring).ok());
    EXPECT_TRUE(brute::acyclic_coloring(f.graph, f.coloring));
    EXPECT_EQ(stats.claim_checks, 1);
}

TEST(KdegExtension, DoubleRecolorBranch)
{
    Fixture f = double_instance();
    ASSERT_TRUE(is_acyclic(f.graph, f.coloring).acyclic);
    const KdegContext ctx = build_kdeg_context(f.graph, f.coloring, f.xy);
    EXPECT_EQ(ctx.c_prime.to_vector(), (std::vector<Color>{3, 4, 6}));
    EXPECT_EQ(ctx.c_star.to_vector(), (std::vector<Color>{3, 4}));
    EXPECT_TRUE(valid_colors(f.coloring, 0).empty());

    ColorerOptions options;
    options.check_each_mutation = true;
    const auto outcome = extend_edge_kdeg(f.graph, f.coloring, f.xy, 4, options);
    EXPECT_EQ(outcome.branch, "kdeg:double");
    EXPECT_EQ(outcome.recolored, 2);
    EXPECT_EQ(f.coloring.color(0), 6);
    EXPECT_TRUE(verify_coloring(f.graph, f.coloring).ok());
    EXPECT_TRUE(brute::acyclic_coloring(f.graph, f.coloring));
}

TEST(KdegExtension, FailureLeavesColoringUntouched)
{
    // Two colors on a triangle: no branch can color the last edge.
    Fixture f = fixture(3, {{0, 1}, {0, 2}, {1, 2}}, {kNoColor, 1, 2}, 2);
    const PartialEdgeColoring before = f.coloring;
    ColorerOptions options;
    options.enforce_claims = false;
    EXPECT_THROW(extend_edge_kdeg(f.graph, f.coloring, f.xy, 4, options), ExtensionFailed);
    EXPECT_EQ(f.coloring, before);
}

TEST(KdegColorer, RandomGraphsMeetTheBound)
{
    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = random_k_degenerate(
            {Family::RandomKdeg, 2 + static_cast<int>(rng.below(59)), 4, rng.next()});
        const ColoringRun run = color_graph_kdeg(g, 4);
        const std::optional<int> bound
            = g.max_degree() > 0 ? std::optional<int>(palette_size_k(4, g.max_degree())) : std::nullopt;
        const auto report = verify_coloring(g, run.coloring, bound);
        ASSERT_TRUE(report.ok()) << "trial " << trial;
        EXPECT_EQ(run.stats.extensions, g.num_edges());
        EXPECT_LE(run.stats.max_recolored, 2);
    }
}

TEST(KdegColorer, FuzzWithCheckAfterEveryMutation)
{
    Rng rng(555);
    int calls = 0;
    while (calls < 10000) {
        const int k = 4 + static_cast<int>(rng.below(5));
        const Graph base = random_k_degenerate({Family::RandomKdeg,
            5 + static_cast<int>(rng.below(35)), k, rng.next(),
            rng.below(3) == 0 ? Attachment::Saturated : Attachment::Uniform});
        // Relabeling changes every tie-break and so the peel order.
        const Graph g = relabel(base, rng);
        ColorerOptions options;
        options.check_each_mutation = true;
        const ColoringRun run = color_graph_kdeg(g, k, options);
        ASSERT_TRUE(verify_coloring(g, run.coloring, run.palette).ok());
        calls += run.stats.extensions;
    }
}

TEST(KdegExtension, ExtendsArbitraryAcyclicColorings)
{
    // Colorings not produced by the peel: random valid assignments on G - xy.
    Rng rng(91);
    int calls = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const int k = 4 + static_cast<int>(rng.below(3));
        const Graph g = random_k_degenerate({Family::RandomKdeg,
            5 + static_cast<int>(rng.below(20)), k, rng.next(), Attachment::Saturated});
        if (g.num_edges() == 0) {
            continue;
        }
        const OrientedEdge xy = find_low_degree_edge(g, k);
        PartialEdgeColoring c(g, palette_size_k(k, g.max_degree()));
        auto ids = g.edge_ids();
        for (std::size_t i = ids.size(); i > 1; --i) {
            std::swap(ids[i - 1], ids[rng.below(i)]);
        }
        for (EdgeId e : ids) {
            const auto valid = valid_colors(c, e).to_vector();
            if (e != xy.edge && !valid.empty()) {
                c.assign(e, valid[rng.below(valid.size())]);
            }
        }
        ExtensionOutcome outcome;
        ASSERT_NO_THROW(outcome = extend_edge_kdeg(g, c, xy, k));
        ASSERT_TRUE(is_acyclic(g, c).acyclic);
        EXPECT_TRUE(c.is_colored(xy.edge));
        ++calls;
    }
    EXPECT_GT(calls, 2500);
}

TEST(KdegColorer, BelowTheBoundNeverProducesInvalidColorings)
{
    // With too few colors failures are legitimate, but every success must be
    // a valid coloring and every recoloring must have been checked.
    Rng rng(3);
    int successes = 0;
    int failures = 0;
    std::map<std::string, int> branches;
    for (int trial = 0; trial < 400; ++trial) {
        const int k = 4 + static_cast<int>(rng.below(2));
        const Graph g = random_k_degenerate(
            {Family::RandomKdeg, 8 + static_cast<int>(rng.below(30)), k, rng.next()});
        ColorerOptions options;
        options.palette = g.max_degree() + 1 + static_cast<int>(rng.below(3));
        options.enforce_claims = false;
        try {
            const ColoringRun run = color_graph_kdeg(g, k, options);
            ASSERT_TRUE(verify_coloring(g, run.coloring, *options.palette).ok());
            for (const auto& [label, count] : run.stats.branches) {
                branches[label] += count;
            }
            ++successes;
        } catch (const ExtensionFailed&) {
            ++failures;
        }
    }
    EXPECT_GT(successes, 0);
    EXPECT_GT(branches["kdeg:candidate"], 0);
}

TEST(KdegColorer, Deterministic)
{
    const Graph g = random_k_degenerate({Family::RandomKdeg, 50, 6, 8});
    const ColoringRun a = color_graph_kdeg(g, 6);
    const ColoringRun b = color_graph_kdeg(g, 6);
    EXPECT_EQ(a.coloring, b.coloring);
    EXPECT_EQ(a.peel, b.peel);
}

TEST(KdegColorer, PeelUsesLowDegreeEdges)
{
    const Graph g = random_k_degenerate({Family::RandomKdeg, 40, 5, 12});
    Graph h = g;
    for (const auto& xy : low_degree_peel(g, 5)) {
        EXPECT_EQ(xy, find_low_degree_edge(h, 5));
        h.remove_edge(xy.edge);
    }
    EXPECT_EQ(h.num_edges(), 0);
}
