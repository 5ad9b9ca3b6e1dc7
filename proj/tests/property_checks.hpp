#pragma once

// Randomized invariant checks shared by the property suite and the acceptance
// binary. Each returns an empty optional on success, else a failure message.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "support.hpp"

namespace pft {

using Failure = std::optional<std::string>;

// min/max-affine, generalized means and the two mixing nodes
inline Operator random_any_operator(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> kind(0, 3);
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < n; ++i) {
        switch (kind(rng)) {
            case 0: coords.push_back(random_minmax_expr(rng, n, 2)); break;
            case 1: coords.push_back(random_mean_expr(rng, n, 2)); break;
            case 2: coords.push_back(supmix(random_minmax_expr(rng, n, 1), random_mean_expr(rng, n, 1))); break;
            default: coords.push_back(infmix(random_mean_expr(rng, n, 1), random_minmax_expr(rng, n, 1)));
        }
    }
    return Operator(n, std::move(coords));
}

inline NodeSet random_set(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << n) - 1);
    return NodeSet(d(rng));
}

/// T'_{p(i)}(x) = T_i(x o p)
inline Operator permute(const Operator& op, const std::vector<std::size_t>& p) {
    std::vector<Expr> coords(op.dim());
    for (std::size_t i = 0; i < op.dim(); ++i) coords[p[i]] = relabel(op.coord(i), p);
    return Operator(op.dim(), std::move(coords));
}

inline NodeSet image(NodeSet s, const std::vector<std::size_t>& p) {
    NodeSet out;
    for (auto i : s.members()) out.insert(p[i]);
    return out;
}

namespace detail {

inline double sup_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

inline int rank(const ExtValue& v) { return v.is_neg_inf() ? -1 : v.is_pos_inf() ? 1 : 0; }

inline bool ext_le(const ExtValue& a, const ExtValue& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    return !a.is_finite() || a.value() <= b.value() + 1e-9 * (1.0 + std::abs(b.value()));
}

inline Failure fail(const std::string& what, const Operator& op) { return what + " fails for\n" + to_dsl(op); }

}  // namespace detail

inline Failure check_monotonicity(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> up(0.0, 3.0);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto op = random_any_operator(rng, n);
        const auto x = random_vector(rng, n);
        auto y = x;
        for (auto& v : y)
            if (rng() % 2) v += up(rng);
        const auto tx = eval(op, x), ty = eval(op, y);
        for (std::size_t i = 0; i < n; ++i)
            if (tx[i] > ty[i] + 1e-9 * (1.0 + std::abs(ty[i]))) return detail::fail("monotonicity", op);
    }
    return {};
}

inline Failure check_homogeneity(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> shift_by(-10.0, 10.0);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto op = random_any_operator(rng, n);
        const auto x = random_vector(rng, n);
        const double c = shift_by(rng);
        auto y = x;
        for (auto& v : y) v += c;
        const auto tx = eval(op, x), ty = eval(op, y);
        for (std::size_t i = 0; i < n; ++i)
            if (std::abs(ty[i] - tx[i] - c) > 1e-9 * (1.0 + std::abs(tx[i]))) return detail::fail("homogeneity", op);
    }
    return {};
}

inline Failure check_nonexpansive(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto op = random_any_operator(rng, n);
        const auto x = random_vector(rng, n), y = random_vector(rng, n);
        const auto tx = eval(op, x), ty = eval(op, y);
        std::vector<double> dx(n), dt(n);
        for (std::size_t i = 0; i < n; ++i) {
            dx[i] = x[i] - y[i];
            dt[i] = tx[i] - ty[i];
        }
        if (hilbert_seminorm(dt) > hilbert_seminorm(dx) + 1e-10) return detail::fail("Hilbert nonexpansiveness", op);
        if (detail::sup_dist(tx, ty) > detail::sup_dist(x, y) + 1e-10) return detail::fail("sup-norm nonexpansiveness", op);
    }
    return {};
}

// pushing more coordinates to +inf can only raise the limit, to -inf only lower it
inline Failure check_oracle_tail_monotone(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 5;
        const auto op = random_any_operator(rng, n);
        NodeSet small = random_set(rng, n);
        if (small.empty()) small.insert(t % n);
        const NodeSet big = small | random_set(rng, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!detail::ext_le(eval_ext(op, i, {small, Sign::Plus}), eval_ext(op, i, {big, Sign::Plus})))
                return detail::fail("oracle monotonicity (+)", op);
            if (!detail::ext_le(eval_ext(op, i, {big, Sign::Minus}), eval_ext(op, i, {small, Sign::Minus})))
                return detail::fail("oracle monotonicity (-)", op);
        }
    }
    return {};
}

inline Failure check_reach_closure(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 2 + t % 5;
        const auto op = random_minmax_operator(rng, n);
        const Sign s = t % 2 ? Sign::Plus : Sign::Minus;
        const auto h = hypergraph_oracle(op, GameKind::at_infinity(), s);
        NodeSet a = random_set(rng, n);
        if (a.empty()) a.insert(0);
        const NodeSet b = a | random_set(rng, n);
        const NodeSet ra = reach(h, a);
        if (!a.subset_of(ra)) return detail::fail("reach extensivity", op);
        if (reach(h, ra) != ra) return detail::fail("reach idempotence", op);
        if (!ra.subset_of(reach(h, b))) return detail::fail("reach monotonicity", op);
    }
    return {};
}

// every Min action meets every Max action; actions() scans all candidate sets
inline Failure check_actions_intersect(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto op = random_any_operator(rng, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto mins = actions(op, GameKind::at_infinity(), Player::Min, i);
            const auto maxs = actions(op, GameKind::at_infinity(), Player::Max, i);
            if (mins.empty() || maxs.empty()) return detail::fail("nonempty action sets", op);
            for (auto a : mins)
                for (auto b : maxs)
                    if (!a.intersects(b)) return detail::fail("action intersection", op);
        }
    }
    return {};
}

inline Failure check_shift_invariant_hyperarcs(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto op = random_any_operator(rng, n);
        const auto g = random_vector(rng, n, 10.0);
        const auto shifted = perturb_diagonal(op, g);
        for (Sign s : {Sign::Plus, Sign::Minus})
            if (build_hypergraph(op, GameKind::at_infinity(), s).arcs() !=
                build_hypergraph(shifted, GameKind::at_infinity(), s).arcs())
                return detail::fail("shift invariance of hyperarcs", op);
    }
    return {};
}

inline Failure check_permutation_equivariance(int trials, unsigned seed) {
    std::mt19937 rng(seed);
    for (int t = 0; t < trials; ++t) {
        const std::size_t n = 2 + t % 4;
        const auto op = random_minmax_operator(rng, n);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        const auto q = permute(op, p);
        const auto a = decide_existence(op), b = decide_existence(q);
        if (a.verdict != b.verdict) return detail::fail("permutation equivariance", op);
        if (a.disjoint() && !(is_dominion(q, GameKind::at_infinity(), Player::Min, image(a.min_dominion, p)) &&
                              is_dominion(q, GameKind::at_infinity(), Player::Max, image(a.max_dominion, p))))
            return detail::fail("permuted witness", op);
    }
    return {};
}

}  // namespace pft
