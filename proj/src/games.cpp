#include "pfgame/games.hpp"

#include <cmath>
#include <stdexcept>

namespace pfgame {

GameKind GameKind::local_at(std::vector<double> u, LocalOptions opts) {
    for (double v : u)
        if (!std::isfinite(v)) throw std::invalid_argument("local game requires a finite point");
    GameKind g;
    g.u_ = std::move(u);
    g.opts_ = opts;
    return g;
}

namespace {

void check_game(const Operator& op, const GameKind& game) {
    if (game.is_local() && game.point().size() != op.dim())
        throw std::invalid_argument("local game point has wrong dimension");
}

// True iff T_i is "pinned" along the sign direction of `direction`: bounded at
// infinity (game at infinity) or locally constant (local game).
bool pinned(const Operator& op, const GameKind& game, Sign sign, std::size_t i, NodeSet direction) {
    if (!game.is_local()) return eval_ext(op, i, {direction, sign}).is_finite();
    return locally_constant(op, i, game.point(), direction,
                            sign == Sign::Plus ? Orientation::Increase : Orientation::Decrease,
                            game.local_options());
}

Sign sign_of(Player p) { return p == Player::Min ? Sign::Plus : Sign::Minus; }

}  // namespace

bool action_ok(const Operator& op, const GameKind& game, Player player, std::size_t i, NodeSet action,
               const OracleCounter* counter) {
    check_game(op, game);
    if (action.empty()) throw std::invalid_argument("action_ok: action must be nonempty");
    const NodeSet away = action.complement(op.dim());
    if (away.empty()) return true;
    if (counter) counter->bump();
    return pinned(op, game, sign_of(player), i, away);
}

std::vector<NodeSet> actions(const Operator& op, const GameKind& game, Player player, std::size_t i) {
    std::vector<NodeSet> out;
    for_each_subset(op.dim(), true, [&](NodeSet s) {
        if (action_ok(op, game, player, i, s)) out.push_back(s);
        return true;
    });
    return out;
}

bool is_dominion(const Operator& op, const GameKind& game, Player player, NodeSet delta) {
    if (delta.empty()) throw std::invalid_argument("is_dominion: set must be nonempty");
    for (auto i : delta.members())
        if (!action_ok(op, game, player, i, delta)) return false;
    return true;
}

std::vector<NodeSet> dominions(const Operator& op, const GameKind& game, Player player) {
    std::vector<NodeSet> out;
    for_each_subset(op.dim(), true, [&](NodeSet s) {
        if (is_dominion(op, game, player, s)) out.push_back(s);
        return true;
    });
    return out;
}

HeadOracle hypergraph_oracle(const Operator& op, const GameKind& game, Sign sign, OracleCounter counter) {
    check_game(op, game);
    return {op.dim(), [op, game, sign, counter](NodeSet tail, std::size_t head) {
                if (tail.contains(head)) return false;
                counter.bump();
                return !pinned(op, game, sign, head, tail);
            }};
}

Hypergraph materialize(const HeadOracle& oracle) {
    if (oracle.n > 20) throw std::length_error("materializing a hypergraph requires n <= 20");
    std::vector<Hyperarc> arcs;
    for_each_subset(oracle.n, true, [&](NodeSet tail) {
        for (auto i : tail.complement(oracle.n).members())
            if (oracle.fires(tail, i)) arcs.push_back({tail, i});
        return true;
    });
    return Hypergraph(oracle.n, std::move(arcs)).sorted();
}

Hypergraph build_hypergraph(const Operator& op, const GameKind& game, Sign sign) {
    return materialize(hypergraph_oracle(op, game, sign));
}

Digraph build_digraph(const Operator& op, const GameKind& game, OracleCounter counter) {
    check_game(op, game);
    if (!op.is_convex()) throw std::invalid_argument("build_digraph: the digraph test requires a convex operator");
    Digraph g{op.dim(), {}};
    for (std::size_t i = 0; i < op.dim(); ++i)
        for (std::size_t j = 0; j < op.dim(); ++j) {
            counter.bump();
            if (!pinned(op, game, Sign::Plus, i, NodeSet::single(j))) g.arcs.emplace_back(i, j);
        }
    return g;
}

HeadOracle tensor_hypergraph(const TensorPattern& pattern) {
    pattern.validate();
    std::vector<std::vector<NodeSet>> rows(pattern.dim);
    for (const auto& ix : pattern.entries) {
        NodeSet later;
        for (std::size_t k = 1; k < ix.size(); ++k) later.insert(ix[k]);
        rows[ix[0]].push_back(later);
    }
    return {pattern.dim, [rows = std::move(rows)](NodeSet tail, std::size_t head) {
                if (tail.contains(head)) return false;
                for (auto later : rows[head])
                    if (!later.intersects(tail)) return false;
                return true;
            }};
}

Digraph tensor_digraph(const TensorPattern& pattern) {
    pattern.validate();
    std::vector<NodeSet> succ(pattern.dim);
    for (const auto& ix : pattern.entries)
        for (std::size_t k = 1; k < ix.size(); ++k) succ[ix[0]].insert(ix[k]);
    Digraph g{pattern.dim, {}};
    for (std::size_t i = 0; i < pattern.dim; ++i)
        for (auto j : succ[i].members()) g.arcs.emplace_back(i, j);
    return g;
}

}  // namespace pfgame
