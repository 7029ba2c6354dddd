#include "support/small_graphs.hpp"

#include "acyclic/errors.hpp"
#include "acyclic/generator.hpp"
#include "acyclic/graph.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace acyclic;

namespace {

Graph cycle4()
{
    const std::pair<Vertex, Vertex> edges[] = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    return Graph::from_edges(4, edges);
}

Graph complete(int n)
{
    return make_family({Family::Complete, n, 1, 0, Attachment::Uniform});
}

Graph star(int leaves)
{
    return make_family({Family::Star, leaves + 1, 1, 0, Attachment::Uniform});
}

// Max over vertex subsets of the minimum degree of the induced subgraph.
int degeneracy_by_subsets(const Graph& g)
{
    const int n = g.num_vertices();
    int best = 0;
    for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
        int min_deg = n;
        for (Vertex v = 0; v < n; ++v) {
            if (!(subset >> v & 1U)) {
                continue;
            }
            int d = 0;
            for (const auto& inc : g.neighbors(v)) {
                d += subset >> inc.neighbor & 1U ? 1 : 0;
            }
            min_deg = std::min(min_deg, d);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

} // namespace

TEST(Graph, RejectsLoopsDuplicatesAndBadIds)
{
    Graph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), Error);
    EXPECT_THROW(g.add_edge(2, 2), Error);
    EXPECT_THROW(g.add_edge(0, 3), Error);
    EXPECT_THROW(g.add_edge(-1, 2), Error);
    try {
        g.add_edge(1, 1);
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidGraph);
    }
}

TEST(Graph, AdjacencyIsSortedAndSearchable)
{
    Graph g(5);
    g.add_edge(0, 4);
    g.add_edge(0, 2);
    g.add_edge(3, 0);
    std::vector<Vertex> seen;
    for (const auto& inc : g.neighbors(0)) {
        seen.push_back(inc.neighbor);
    }
    EXPECT_EQ(seen, (std::vector<Vertex>{2, 3, 4}));
    EXPECT_EQ(g.find_edge(4, 0), 0);
    EXPECT_EQ(g.find_edge(0, 3), 2);
    EXPECT_FALSE(g.find_edge(1, 2).has_value());
    EXPECT_EQ(g.max_degree(), 3);
    EXPECT_EQ(g.min_degree(), 0);
}

TEST(Graph, RemoveRestoreRoundTrip)
{
    const Graph original = cycle4();
    Graph g = original;
    g.remove_edge(2);
    EXPECT_EQ(g.num_edges(), 3);
    EXPECT_FALSE(g.contains(2));
    g.restore_edge(2);
    EXPECT_EQ(g, original);
}

TEST(Graph, RemoveFromK4)
{
    Graph g = complete(4);
    const EdgeId e = *g.find_edge(0, 1);
    g.remove_edge(e);
    EXPECT_EQ(g.num_edges(), 5);
    EXPECT_EQ(g.degree(0), 2);
    EXPECT_EQ(g.degree(1), 2);
    EXPECT_THROW(g.remove_edge(e), Error);
    EXPECT_THROW(g.restore_edge(99), Error);
    g.restore_edge(e);
    EXPECT_THROW(g.restore_edge(e), Error);
}

TEST(Graph, RandomRemoveRestoreSequencesRoundTrip)
{
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph original = random_k_degenerate({Family::RandomKdeg, 20, 4, rng.next()});
        Graph g = original;
        auto ids = g.edge_ids();
        for (std::size_t i = ids.size(); i > 1; --i) {
            std::swap(ids[i - 1], ids[rng.below(i)]);
        }
        for (EdgeId e : ids) {
            g.remove_edge(e);
        }
        EXPECT_EQ(g.num_edges(), 0);
        for (std::size_t i = ids.size(); i > 1; --i) {
            std::swap(ids[i - 1], ids[rng.below(i)]);
        }
        for (EdgeId e : ids) {
            g.restore_edge(e);
        }
        EXPECT_EQ(g, original);
    }
}

TEST(Degeneracy, SmallExamples)
{
    EXPECT_EQ(degeneracy(complete(5)).degeneracy, 4);
    EXPECT_EQ(degeneracy(cycle4()).degeneracy, 2);
    EXPECT_EQ(degeneracy(star(6)).degeneracy, 1);
    EXPECT_EQ(degeneracy(Graph(4)).degeneracy, 0);
    const Graph tree = make_family({Family::Path, 9, 1, 0, Attachment::Uniform});
    EXPECT_EQ(degeneracy(tree).degeneracy, 1);
    EXPECT_TRUE(is_k_degenerate(complete(5), 4));
    EXPECT_FALSE(is_k_degenerate(complete(5), 3));
}

TEST(Degeneracy, MatchesSubsetDefinitionOnAllSmallGraphs)
{
    for (int n = 1; n <= 5; ++n) {
        for (std::uint32_t mask : small_graphs::isomorphism_classes(n)) {
            const Graph g = small_graphs::from_mask(n, mask);
            const auto d = degeneracy(g);
            EXPECT_EQ(d.degeneracy, degeneracy_by_subsets(g)) << "n=" << n << " mask=" << mask;
            EXPECT_LE(d.degeneracy, g.max_degree());
        }
    }
}

TEST(Degeneracy, OrderHasBoundedBackDegree)
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int k = 1 + static_cast<int>(rng.below(8));
        const Graph g = random_k_degenerate({Family::RandomKdeg, 40, k, rng.next()});
        const auto d = degeneracy(g);
        ASSERT_EQ(d.order.size(), static_cast<std::size_t>(g.num_vertices()));
        const auto back = back_degrees(g, d.order);
        for (int b : back) {
            EXPECT_LE(b, d.degeneracy);
        }
        EXPECT_LE(d.degeneracy, k);
        EXPECT_LE(d.degeneracy, g.max_degree());
    }
}

TEST(Degeneracy, ForestsAreOneDegenerate)
{
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        // Every vertex takes at most one earlier neighbor, so this is a forest.
        const Graph g = random_k_degenerate({Family::RandomKdeg, 30, 1, rng.next()});
        EXPECT_EQ(degeneracy(g).degeneracy, g.num_edges() > 0 ? 1 : 0);
    }
}

TEST(LowDegreeEdge, Examples)
{
    const Graph s = star(5);
    const auto e = find_low_degree_edge(s, 3);
    EXPECT_EQ(s.degree(e.x), 1);
    EXPECT_EQ(e.y, 0);

    const auto k4 = find_low_degree_edge(complete(4), 3);
    EXPECT_EQ(complete(4).degree(k4.x), 3);

    const std::pair<Vertex, Vertex> path[] = {{0, 1}, {1, 2}};
    const auto p = find_low_degree_edge(Graph::from_edges(3, path), 1);
    EXPECT_EQ(p.x, 0);
    EXPECT_EQ(p.y, 1);

    EXPECT_THROW(find_low_degree_edge(Graph(3), 2), Error);
    EXPECT_THROW(find_low_degree_edge(complete(5), 3), Error);
}

TEST(LowDegreeEdge, PeelingNeverStalls)
{
    Rng rng(17);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 1 + trial % 8;
        Graph g = random_k_degenerate({Family::RandomKdeg, 2 + static_cast<int>(rng.below(40)), k,
            rng.next()});
        const int m = g.num_edges();
        int steps = 0;
        while (g.num_edges() > 0) {
            const auto xy = find_low_degree_edge(g, k);
            ASSERT_LE(g.degree(xy.x), k);
            g.remove_edge(xy.edge);
            ++steps;
        }
        EXPECT_EQ(steps, m);
    }
}

TEST(SpecialEdge, Examples)
{
    const Graph s = star(5);
    const auto e = find_special_edge(s, 3);
    EXPECT_EQ(e.y, 0);
    EXPECT_EQ(s.degree(e.x), 1);

    const Graph k4 = complete(4);
    const auto f = find_special_edge(k4, 3);
    EXPECT_TRUE(k4.contains(f.edge));

    EXPECT_THROW(find_special_edge(Graph(2), 3), Error);
    try {
        find_special_edge(complete(5), 3);
        FAIL() << "K5 has no special edge for k = 3";
    } catch (const Error& err) {
        EXPECT_EQ(err.code(), ErrorCode::NotKDegenerate);
    }
}

TEST(SpecialEdge, GeneratedGraphPostcondition)
{
    const Graph g = random_k_degenerate({Family::RandomKdeg, 20, 3, 7});
    const auto xy = find_special_edge(g, 3);
    EXPECT_LE(g.degree(xy.x), 3);
    int high = 0;
    for (const auto& inc : g.neighbors(xy.y)) {
        high += g.degree(inc.neighbor) > 3 ? 1 : 0;
        EXPECT_GE(g.degree(inc.neighbor), g.degree(xy.x));
    }
    EXPECT_LE(high, 3);
}

TEST(SpecialEdge, PeelOfThreeDegenerateGraphEmptiesIt)
{
    Graph g = random_k_degenerate({Family::RandomKdeg, 40, 3, 99, Attachment::Saturated});
    const int m = g.num_edges();
    int steps = 0;
    while (g.num_edges() > 0) {
        g.remove_edge(find_special_edge(g, 3).edge);
        ++steps;
    }
    EXPECT_EQ(steps, m);
}

TEST(EdgeList, ParsesCommentsBlankLinesAndCrlf)
{
    std::istringstream in("# header\r\n0 1\r\n\r\n  1 2 \n# trailing\n2 5\n");
    const Graph g = read_edge_list(in);
    EXPECT_EQ(g.num_vertices(), 6);
    EXPECT_EQ(g.num_edges(), 3);
    EXPECT_TRUE(g.find_edge(2, 5).has_value());
}

TEST(EdgeList, RejectsMalformedLines)
{
    for (const char* text : {"0\n", "0 1 2\n", "a b\n", "0 -1\n", "1.5 2\n"}) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
        }
    }
    std::istringstream dup("0 1\n1 0\n");
    try {
        read_edge_list(dup);
        ADD_FAILURE() << "accepted duplicate edge";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidGraph);
    }
}

TEST(EdgeList, WriteReadRoundTrip)
{
    const Graph g = random_k_degenerate({Family::RandomKdeg, 25, 3, 4});
    std::stringstream buf;
    write_edge_list(buf, g);
    const Graph h = read_edge_list(buf);
    EXPECT_EQ(h.num_edges(), g.num_edges());
    for (EdgeId e : g.edge_ids()) {
        const auto& ends = g.endpoints(e);
        EXPECT_TRUE(h.find_edge(ends.u, ends.v).has_value());
    }
}
