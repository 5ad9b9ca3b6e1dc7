#pragma once

// Shared fixtures, random generators and independent oracles for the test
// suites. Oracles here never call the library routine they check.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pfgame/decide.hpp"
#include "pfgame/games.hpp"
#include "pfgame/hypergraph.hpp"
#include "pfgame/numerics.hpp"
#include "pfgame/parse.hpp"
#include "pfgame/tensor.hpp"

namespace pft {

using namespace pfgame;

inline std::string data_path(const std::string& name) { return std::string(PFGAME_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Operator load_operator(const std::string& name) { return parse_operator(slurp(data_path(name))); }
inline Tensor load_tensor(const std::string& name) { return parse_tensor(slurp(data_path(name))); }

/// Set from 1-based labels.
inline NodeSet S(std::initializer_list<int> labels) {
    NodeSet s;
    for (int l : labels) s.insert(static_cast<std::size_t>(l - 1));
    return s;
}

inline Hyperarc arc(std::initializer_list<int> tail, int head) { return {S(tail), static_cast<std::size_t>(head - 1)}; }

// ---------------------------------------------------------------- generators

/// Avg over a random nonempty subset with weights from a coarse grid, so every
/// asymptotic slope is a multiple of 1/64.
inline Expr random_affine(std::mt19937& rng, std::size_t n, bool with_shift = true) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> count(1, static_cast<int>(std::min<std::size_t>(n, 3)));
    const int m = count(rng);
    std::vector<std::size_t> idx;
    while (static_cast<int>(idx.size()) < m) {
        auto j = pick(rng);
        if (std::find(idx.begin(), idx.end(), j) == idx.end()) idx.push_back(j);
    }
    Expr e;
    if (m == 1) {
        e = var(idx[0]);
    } else {
        std::vector<int> w(m, 1);
        std::uniform_int_distribution<int> extra(0, m - 1);
        for (int t = m; t < 4; ++t) ++w[extra(rng)];  // weights in quarters
        std::vector<std::pair<double, Expr>> terms;
        for (int t = 0; t < m; ++t) terms.emplace_back(w[t] / 4.0, var(idx[t]));
        e = avg(std::move(terms));
    }
    if (with_shift) {
        std::uniform_int_distribution<int> c(-3, 3);
        const int k = c(rng);
        if (k != 0) e = shift(k, e);
    }
    return e;
}

/// min/max over affine leaves, nested up to `depth`.
inline Expr random_minmax_expr(std::mt19937& rng, std::size_t n, int depth, bool with_shift = true) {
    std::uniform_int_distribution<int> kind(0, 2);
    if (depth == 0) return random_affine(rng, n, with_shift);
    const int k = kind(rng);
    if (k == 0) return random_affine(rng, n, with_shift);
    std::uniform_int_distribution<int> arity(2, 3);
    std::vector<Expr> ch;
    for (int a = arity(rng); a > 0; --a) ch.push_back(random_minmax_expr(rng, n, depth - 1, with_shift));
    return k == 1 ? min_of(std::move(ch)) : max_of(std::move(ch));
}

inline Operator random_minmax_operator(std::mt19937& rng, std::size_t n, int depth = 2, bool with_shift = true) {
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(random_minmax_expr(rng, n, depth, with_shift));
    return Operator(n, std::move(coords));
}

/// Generalized-means expression: Mean(r) with r in a fixed menu, Avg, shifts.
inline Expr random_mean_expr(std::mt19937& rng, std::size_t n, int depth) {
    static const double orders[] = {-INFINITY, -2.0, -1.0, 0.0, 1.0, 2.0, INFINITY};
    std::uniform_int_distribution<int> leaf(0, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    if (depth == 0 || leaf(rng) == 0) {
        Expr v = var(pick(rng));
        std::uniform_int_distribution<int> c(-2, 2);
        const int k = c(rng);
        return k == 0 ? v : shift(0.5 * k, v);
    }
    std::uniform_int_distribution<int> arity(1, 3), which(0, 6), wgt(1, 3);
    const int a = arity(rng);
    std::vector<double> w;
    double total = 0.0;
    for (int t = 0; t < a; ++t) {
        w.push_back(wgt(rng));
        total += w.back();
    }
    std::vector<std::pair<double, Expr>> terms;
    for (int t = 0; t < a; ++t) terms.emplace_back(w[t] / total, random_mean_expr(rng, n, depth - 1));
    return mean(orders[which(rng)], std::move(terms));
}

inline Operator random_mean_operator(std::mt19937& rng, std::size_t n, int depth = 3) {
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back(random_mean_expr(rng, n, depth));
    return Operator(n, std::move(coords));
}

/// Random order-d pattern on n nodes with every row nonempty, unit or random weights.
inline Tensor random_tensor(std::mt19937& rng, std::size_t n, std::size_t d, double density, bool random_values) {
    std::bernoulli_distribution keep(density);
    std::uniform_real_distribution<double> val(0.2, 3.0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    Tensor t;
    t.order = d;
    t.dim = n;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> ix(d, 0);
        ix[0] = i;
        bool any = false;
        // walk all later multi-indices in lexicographic order
        std::function<void(std::size_t)> rec = [&](std::size_t pos) {
            if (pos == d) {
                if (keep(rng)) {
                    t.entries.push_back({ix, random_values ? val(rng) : 1.0});
                    any = true;
                }
                return;
            }
            for (std::size_t j = 0; j < n; ++j) {
                ix[pos] = j;
                rec(pos + 1);
            }
        };
        rec(1);
        if (!any) {
            for (std::size_t p = 1; p < d; ++p) ix[p] = pick(rng);
            t.entries.push_back({ix, random_values ? val(rng) : 1.0});
        }
    }
    return t;
}

inline Tensor reweight(const Tensor& t, std::mt19937& rng) {
    std::uniform_real_distribution<double> val(0.05, 20.0);
    Tensor r = t;
    for (auto& e : r.entries) e.value = val(rng);
    return r;
}

/// Block-triangular operator: coordinates in I read only I, coordinates in J
/// read only J, the rest read anything. I and J are then dominions of both
/// players in the game at infinity.
inline Operator planted_operator(std::mt19937& rng, std::size_t n, NodeSet I, NodeSet J) {
    auto restricted = [&](NodeSet block) {
        const auto m = block.members();
        Expr e = random_minmax_expr(rng, m.size(), 2);
        return relabel(e, m);
    };
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < n; ++i) {
        if (I.contains(i))
            coords.push_back(restricted(I));
        else if (J.contains(i))
            coords.push_back(restricted(J));
        else
            coords.push_back(random_minmax_expr(rng, n, 2));
    }
    return Operator(n, std::move(coords));
}

/// Small syntactic grammar for exhaustive differential testing: a coordinate
/// is an atom, min of two atoms, or max of two atoms; atoms are variables and
/// uniform averages of two variables.
inline std::vector<Expr> grammar_coordinates(std::size_t n) {
    std::vector<Expr> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(var(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) atoms.push_back(avg({{0.5, var(i)}, {0.5, var(j)}}));
    std::vector<Expr> out = atoms;
    for (std::size_t a = 0; a < atoms.size(); ++a)
        for (std::size_t b = a + 1; b < atoms.size(); ++b) {
            out.push_back(min_of({atoms[a], atoms[b]}));
            out.push_back(max_of({atoms[a], atoms[b]}));
        }
    return out;
}

/// Calls fn for every operator whose coordinates range over the grammar.
template <class Fn>
void for_each_grammar_operator(std::size_t n, Fn&& fn) {
    const auto g = grammar_coordinates(n);
    std::vector<std::size_t> pick(n, 0);
    while (true) {
        std::vector<Expr> coords;
        for (auto p : pick) coords.push_back(g[p]);
        fn(Operator(n, std::move(coords)));
        std::size_t pos = 0;
        while (pos < n && ++pick[pos] == g.size()) pick[pos++] = 0;
        if (pos == n) return;
    }
}

inline std::vector<double> random_vector(std::mt19937& rng, std::size_t n, double scale = 5.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    std::vector<double> x(n);
    for (auto& v : x) v = d(rng);
    return x;
}

// ---------------------------------------------------------------- oracles

/// Numerical limit oracle for piecewise-affine-at-infinity expressions (no mix
/// nodes): T_i(sign * a * e_J) is eventually affine in a with slope a multiple
/// of 1/64, so the slope between two far points decides boundedness.
inline bool numeric_unbounded(const Expr& e, std::size_t n, NodeSet J, Sign sign) {
    const double A = 1e6;
    std::vector<double> x1(n, 0.0), x2(n, 0.0);
    for (auto j : J.members()) {
        x1[j] = (sign == Sign::Plus ? A : -A);
        x2[j] = 2.0 * x1[j];
    }
    const double slope = std::abs(eval(e, x2) - eval(e, x1)) / A;
    return slope > 1e-4;
}

/// Hypergraph from the numerical oracle over all tails.
inline Hypergraph numeric_hypergraph(const Operator& op, Sign sign) {
    const std::size_t n = op.dim();
    std::vector<Hyperarc> arcs;
    for_each_subset(n, true, [&](NodeSet tail) {
        for (auto i : tail.complement(n).members())
            if (numeric_unbounded(op.coord(i), n, tail, sign)) arcs.push_back({tail, i});
        return true;
    });
    return Hypergraph(n, std::move(arcs)).sorted();
}

/// Fixpoint of "add every head whose arc tail is inside the set", by repeated full scans.
inline NodeSet naive_reach(const Hypergraph& h, NodeSet start) {
    NodeSet cur = start;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& a : h.arcs())
            if (a.tail.subset_of(cur) && !cur.contains(a.head)) {
                cur.insert(a.head);
                grew = true;
            }
    }
    return cur;
}

/// Depth-first search for a hyperpath from J to a node outside J: some arc with
/// tail inside the explored set and head outside J, explored set grown one head
/// at a time. Independent of the chaining closure by exploring all orders.
inline bool hyperpath_leaves(const Hypergraph& h, NodeSet J) {
    std::function<bool(NodeSet, int)> dfs = [&](NodeSet have, int budget) {
        for (const auto& a : h.arcs()) {
            if (!a.tail.subset_of(have) || have.contains(a.head)) continue;
            if (!J.contains(a.head)) return true;
            if (budget > 0) {
                NodeSet next = have;
                next.insert(a.head);
                if (dfs(next, budget - 1)) return true;
            }
        }
        return false;
    };
    return dfs(J, static_cast<int>(h.size()));
}

/// Final classes via the transitive closure (Warshall).
inline std::vector<NodeSet> closure_final_classes(const Digraph& g) {
    const std::size_t n = g.n;
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (auto [a, b] : g.arcs) r[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    std::vector<NodeSet> out;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        NodeSet cls;
        for (std::size_t j = 0; j < n; ++j)
            if (r[i][j] && r[j][i]) {
                cls.insert(j);
                seen[j] = true;
            }
        bool final = true;
        for (std::size_t j = 0; j < n; ++j)
            if (r[i][j] && !cls.contains(j)) final = false;
        if (final) out.push_back(cls);
    }
    return out;
}

inline std::vector<NodeSet> sets_from_labels(std::initializer_list<std::initializer_list<int>> lists) {
    std::vector<NodeSet> out;
    for (auto l : lists) out.push_back(S(l));
    return out;
}

}  // namespace pft
