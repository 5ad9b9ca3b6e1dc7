#include <gtest/gtest.h>

#include "pfgame/games.hpp"
#include "support.hpp"

using namespace pfgame;
using pft::arc;
using pft::S;
using pft::sets_from_labels;

namespace {

const std::vector<double> kU{0.0, 0.0, 2.0};

}  // namespace

TEST(Actions, RunningExampleAtInfinity) {
    const auto op = pft::load_operator("running_example.op");
    const auto g = GameKind::at_infinity();
    EXPECT_EQ(actions(op, g, Player::Min, 0), sets_from_labels({{1, 2}, {1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Min, 1), sets_from_labels({{1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Min, 2), sets_from_labels({{1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 0), sets_from_labels({{1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 1), sets_from_labels({{1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 2), sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
    EXPECT_EQ(dominions(op, g, Player::Min), sets_from_labels({{1, 3}, {1, 2, 3}}));
    EXPECT_EQ(dominions(op, g, Player::Max), sets_from_labels({{3}, {1, 2, 3}}));
}

TEST(Actions, RunningExampleLocal) {
    const auto op = pft::load_operator("running_example.op");
    const auto g = GameKind::local_at(kU);
    EXPECT_EQ(actions(op, g, Player::Min, 0), sets_from_labels({{1, 2}, {1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Min, 1), sets_from_labels({{1, 2}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Min, 2), sets_from_labels({{1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 0), sets_from_labels({{1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 1), sets_from_labels({{1, 2}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 2), sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
    EXPECT_EQ(dominions(op, g, Player::Min), sets_from_labels({{1, 2}, {1, 3}, {1, 2, 3}}));
    EXPECT_EQ(dominions(op, g, Player::Max), sets_from_labels({{3}, {1, 2, 3}}));
}

TEST(Actions, Blackmailer) {
    const auto op = pft::load_operator("blackmailer.op");
    const auto g = GameKind::at_infinity();
    EXPECT_EQ(actions(op, g, Player::Min, 0), sets_from_labels({{1, 2}, {1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Min, 1), sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Min, 2), sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 0), sets_from_labels({{2, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 1), sets_from_labels({{1, 3}, {1, 2, 3}}));
    EXPECT_EQ(actions(op, g, Player::Max, 2), sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
    EXPECT_EQ(dominions(op, g, Player::Min), sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}));
    EXPECT_EQ(dominions(op, g, Player::Max), sets_from_labels({{3}, {1, 2, 3}}));
}

TEST(Actions, FullSetCostsNoCall) {
    const auto op = pft::load_operator("running_example.op");
    OracleCounter c;
    EXPECT_TRUE(action_ok(op, GameKind::at_infinity(), Player::Min, 0, S({1, 2, 3}), &c));
    EXPECT_EQ(c.value(), 0u);
    EXPECT_THROW(action_ok(op, GameKind::at_infinity(), Player::Min, 0, NodeSet{}), std::invalid_argument);
}

TEST(Actions, MinAndMaxActionsIntersect) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto op = pft::random_minmax_operator(rng, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto mins = actions(op, GameKind::at_infinity(), Player::Min, i);
            const auto maxs = actions(op, GameKind::at_infinity(), Player::Max, i);
            for (auto a : mins)
                for (auto b : maxs) EXPECT_TRUE(a.intersects(b)) << to_dsl(op);
        }
    }
}

TEST(Hypergraphs, RunningExampleArcs) {
    const auto op = pft::load_operator("running_example.op");
    const auto hp = build_hypergraph(op, GameKind::at_infinity(), Sign::Plus).minimal().sorted();
    const auto hm = build_hypergraph(op, GameKind::at_infinity(), Sign::Minus).minimal().sorted();
    EXPECT_EQ(hp.arcs(), Hypergraph(3, {arc({1}, 2), arc({3}, 2), arc({1}, 3), arc({2, 3}, 1)}).sorted().arcs());
    EXPECT_EQ(hm.arcs(), Hypergraph(3, {arc({2}, 1), arc({3}, 1), arc({1}, 2), arc({3}, 2)}).sorted().arcs());
}

TEST(Hypergraphs, BlackmailerArcs) {
    const auto op = pft::load_operator("blackmailer.op");
    const auto hp = build_hypergraph(op, GameKind::at_infinity(), Sign::Plus).minimal().sorted();
    const auto hm = build_hypergraph(op, GameKind::at_infinity(), Sign::Minus).minimal().sorted();
    EXPECT_EQ(hp.arcs(), Hypergraph(3, {arc({2, 3}, 1), arc({3}, 2)}).sorted().arcs());
    EXPECT_EQ(hm.arcs(), Hypergraph(3, {arc({2}, 1), arc({3}, 1), arc({1}, 2), arc({3}, 2)}).sorted().arcs());
    std::vector<NodeSet> inv_plus, inv_minus;
    for_each_subset(3, false, [&](NodeSet J) {
        if (is_invariant(hp, J)) inv_plus.push_back(J);
        if (is_invariant(hm, J)) inv_minus.push_back(J);
        return true;
    });
    EXPECT_EQ(inv_plus, sets_from_labels({{1}, {2}, {1, 2}}));
    EXPECT_EQ(inv_minus, sets_from_labels({{1, 2}}));
}

TEST(Hypergraphs, MatchNumericalOracle) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto op = pft::random_minmax_operator(rng, n);
        for (Sign s : {Sign::Plus, Sign::Minus})
            EXPECT_EQ(build_hypergraph(op, GameKind::at_infinity(), s).arcs(), pft::numeric_hypergraph(op, s).arcs())
                << to_dsl(op);
    }
}

TEST(Hypergraphs, InvariantIffComplementIsDominion) {
    std::mt19937 rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const auto op = pft::random_minmax_operator(rng, n);
        const auto g = GameKind::at_infinity();
        const auto hp = hypergraph_oracle(op, g, Sign::Plus);
        const auto hm = hypergraph_oracle(op, g, Sign::Minus);
        for_each_subset(n, false, [&](NodeSet J) {
            const NodeSet c = J.complement(n);
            EXPECT_EQ(is_invariant(hp, J), is_dominion(op, g, Player::Min, c));
            EXPECT_EQ(is_invariant(hm, J), is_dominion(op, g, Player::Max, c));
            return true;
        });
    }
}

TEST(Tensor, PatternGraphs) {
    const auto t = pft::load_tensor("pattern4.tns");
    const auto p = TensorPattern::of(t);
    const auto g = tensor_digraph(p);
    EXPECT_EQ(final_classes(g), std::vector<NodeSet>{S({1, 2})});
    const auto h = materialize(tensor_hypergraph(p)).minimal().sorted();
    EXPECT_EQ(h.arcs(), Hypergraph(4, {arc({2}, 1), arc({1, 2}, 3), arc({1, 3}, 4)}).sorted().arcs());
    EXPECT_EQ(reach(tensor_hypergraph(p), S({1, 2})), S({1, 2, 3, 4}));
    // arcs other than self loops
    std::vector<std::pair<std::size_t, std::size_t>> loopfree;
    for (auto a : g.arcs)
        if (a.first != a.second) loopfree.push_back(a);
    const std::vector<std::pair<std::size_t, std::size_t>> want{{0, 1}, {1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 2}};
    EXPECT_EQ(loopfree, want);
}

TEST(Tensor, PatternGraphsMatchOperatorGraphs) {
    std::mt19937 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const auto t = pft::random_tensor(rng, 3 + trial % 2, 3, 0.25, true);
        const auto op = tensor_to_operator(t);
        const auto p = TensorPattern::of(t);
        // the pattern hypergraph is H- of the log-domain map
        EXPECT_EQ(build_hypergraph(op, GameKind::at_infinity(), Sign::Minus).arcs(),
                  materialize(tensor_hypergraph(p)).arcs());
        auto a = build_digraph(op, GameKind::at_infinity()).arcs;
        auto b = tensor_digraph(p).arcs;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
    }
}

TEST(Digraph, RequiresConvex) {
    const auto op = pft::load_operator("running_example.op");
    EXPECT_THROW(build_digraph(op, GameKind::at_infinity()), std::invalid_argument);
}

TEST(Hypergraphs, MaterializeSizeGuard) {
    HeadOracle big{21, [](NodeSet, std::size_t) { return false; }};
    EXPECT_THROW(materialize(big), std::length_error);
}
