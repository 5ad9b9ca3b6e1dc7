#include <gtest/gtest.h>

#include <json.hpp>

#include "pfgame/hypergraph.hpp"
#include "support.hpp"

using namespace pfgame;
using pft::arc;
using pft::S;

namespace {

Hypergraph random_hypergraph(std::mt19937& rng, std::size_t n, double density) {
    std::bernoulli_distribution keep(density);
    std::vector<Hyperarc> arcs;
    for_each_subset(n, false, [&](NodeSet tail) {
        for (auto i : tail.complement(n).members())
            if (keep(rng)) arcs.push_back({tail, i});
        return true;
    });
    return Hypergraph(n, std::move(arcs));
}

}  // namespace

TEST(Hypergraph, ValidatesArcs) {
    EXPECT_THROW(Hypergraph(2, {arc({1}, 1)}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(2, {arc({3}, 1)}), std::invalid_argument);
    EXPECT_THROW(Hypergraph(2, {{NodeSet{}, 0}}), std::invalid_argument);
}

TEST(Reach, SmallCases) {
    Hypergraph h(4, {arc({1, 2}, 3), arc({3}, 4), arc({1}, 2)});
    EXPECT_EQ(reach(h, S({1})), S({1, 2, 3, 4}));
    EXPECT_EQ(reach(h, S({2})), S({2}));
    EXPECT_EQ(reach(h, S({3})), S({3, 4}));
    EXPECT_THROW(reach(h, NodeSet{}), std::invalid_argument);
}

TEST(Reach, MatchesNaiveFixpoint) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 5;
        const auto h = random_hypergraph(rng, n, 0.15);
        const auto oracle = HeadOracle::of(h);
        for_each_subset(n, true, [&](NodeSet J) {
            const auto expected = pft::naive_reach(h, J);
            EXPECT_EQ(reach(h, J), expected);
            std::uint64_t calls = 0;
            EXPECT_EQ(reach(oracle, J, &calls), expected);
            EXPECT_LE(calls, n * n);
            return true;
        });
    }
}

TEST(Invariant, MatchesHyperpathSearch) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const auto h = random_hypergraph(rng, n, 0.1);
        for_each_subset(n, true, [&](NodeSet J) {
            const bool expected = !pft::hyperpath_leaves(h, J);
            EXPECT_EQ(is_invariant(h, J), expected);
            EXPECT_EQ(is_invariant(HeadOracle::of(h), J), expected);
            return true;
        });
    }
}

TEST(Hypergraph, MinimalKeepsInclusionMinimalTails) {
    Hypergraph h(3, {arc({1, 2}, 3), arc({1}, 3), arc({2}, 1), arc({2, 3}, 1)});
    const auto m = h.minimal().sorted();
    const std::vector<Hyperarc> expected{arc({2}, 1), arc({1}, 3)};
    EXPECT_EQ(m.arcs(), expected);
}

TEST(Scc, FinalClassesMatchClosure) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        Digraph g{n, {}};
        std::bernoulli_distribution keep(0.25);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (keep(rng)) g.arcs.emplace_back(i, j);
        auto got = final_classes(g);
        auto want = pft::closure_final_classes(g);
        std::sort(want.begin(), want.end(), [](NodeSet a, NodeSet b) { return a.front() < b.front(); });
        EXPECT_EQ(got, want);
        // the SCCs partition the nodes
        NodeSet all;
        for (auto c : strongly_connected_components(g)) {
            EXPECT_FALSE(all.intersects(c));
            all = all | c;
        }
        EXPECT_EQ(all, NodeSet::full(n));
    }
}

TEST(Scc, TensorPatternGraph) {
    Digraph g{4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 2}, {3, 3}}};
    EXPECT_EQ(final_classes(g), std::vector<NodeSet>{S({1, 2})});
}

TEST(Dot, GoldenRunningExampleHminus) {
    Hypergraph h(3, {arc({2}, 1), arc({3}, 1), arc({1}, 2), arc({3}, 2)});
    DotOptions o;
    o.name = "Hminus";
    EXPECT_EQ(to_dot(h.sorted(), o), pft::slurp(pft::data_path("running_example_hminus.dot")));
}

TEST(Dot, HyperarcUsesPointNode) {
    Hypergraph h(3, {arc({2, 3}, 1)});
    const auto dot = to_dot(h);
    EXPECT_NE(dot.find("shape=point"), std::string::npos);
    EXPECT_NE(dot.find("arrowhead=none"), std::string::npos);
}

TEST(Dot, EmptyHypergraph) {
    const auto dot = to_dot(Hypergraph(0));
    EXPECT_EQ(dot, "digraph H {\n}\n");
}

TEST(Json, LabelsAreOneBased) {
    Hypergraph h(3, {arc({2, 3}, 1)});
    const auto j = nlohmann::json::parse(to_json(h));
    EXPECT_EQ(j["n"], 3);
    EXPECT_EQ(j["hyperarcs"][0]["tail"], nlohmann::json({2, 3}));
    EXPECT_EQ(j["hyperarcs"][0]["head"], 1);
}
