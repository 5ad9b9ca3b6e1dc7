#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "pfgame/expr.hpp"
#include "pfgame/hypergraph.hpp"
#include "pfgame/tensor.hpp"

namespace pfgame {

/// Which abstract game: the game at infinity, or the local game at a point u.
class GameKind {
public:
    static GameKind at_infinity() { return GameKind(); }
    static GameKind local_at(std::vector<double> u, LocalOptions opts = {});

    bool is_local() const { return u_.has_value(); }
    const std::vector<double>& point() const { return *u_; }
    const LocalOptions& local_options() const { return opts_; }

private:
    GameKind() = default;
    std::optional<std::vector<double>> u_;
    LocalOptions opts_;
};

enum class Player { Min, Max };

/// Counts oracle queries issued through the game layer. Shared by copies so
/// that lazily-built hypergraphs report into the caller's counter.
class OracleCounter {
public:
    OracleCounter() : count_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}
    void bump() const { count_->fetch_add(1, std::memory_order_relaxed); }
    std::uint64_t value() const { return count_->load(std::memory_order_relaxed); }

private:
    std::shared_ptr<std::atomic<std::uint64_t>> count_;
};

/// Whether player may choose the set `action` in state i. The full set is
/// always admissible and costs no oracle call.
bool action_ok(const Operator& op, const GameKind& game, Player player, std::size_t i, NodeSet action,
               const OracleCounter* counter = nullptr);

/// All admissible actions of player in state i, in enumeration order.
std::vector<NodeSet> actions(const Operator& op, const GameKind& game, Player player, std::size_t i);

/// Delta is a dominion iff it is an admissible action in each of its states.
bool is_dominion(const Operator& op, const GameKind& game, Player player, NodeSet delta);

/// All dominions of player, in enumeration order (exhaustive; small n only).
std::vector<NodeSet> dominions(const Operator& op, const GameKind& game, Player player);

/// Lazy H+ (sign Plus, Min side) or H- (sign Minus, Max side).
HeadOracle hypergraph_oracle(const Operator& op, const GameKind& game, Sign sign, OracleCounter counter = {});

/// Every hyperarc (J, {i}) over all nonempty J. Requires n <= 20.
Hypergraph build_hypergraph(const Operator& op, const GameKind& game, Sign sign);

/// G_inf / G_u: arc i -> j iff T_i is unbounded (resp. strictly increasing)
/// along e_j. Self-loops included. Requires a convex operator.
Digraph build_digraph(const Operator& op, const GameKind& game, OracleCounter counter = {});

/// Pattern-level H_inf(F): (J, i) fires iff i is not in J and every entry of row
/// i has a later index in J.
HeadOracle tensor_hypergraph(const TensorPattern& pattern);

/// G_inf(F) read off the pattern: i -> j iff j is a later index of some entry of row i.
Digraph tensor_digraph(const TensorPattern& pattern);

/// Materializes an oracle over all nonempty tails. Requires n <= 20.
Hypergraph materialize(const HeadOracle& oracle);

}  // namespace pfgame
