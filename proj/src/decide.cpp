#include "pfgame/decide.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pfgame/numerics.hpp"

namespace pfgame {

namespace {

struct LevelHit {
    std::size_t index = std::numeric_limits<std::size_t>::max();
    NodeSet min_dominion, max_dominion;
};

struct SearchState {
    std::uint64_t calls = 0;
    std::uint64_t max_reach = 0;
};

// Tests one candidate I. Returns true with the Max witness in `j` on success.
bool try_candidate(const HeadOracle& hplus, const HeadOracle& hminus, std::size_t n, NodeSet i, NodeSet& j,
                   SearchState& st) {
    if (!is_invariant(hplus, i.complement(n), &st.calls)) return false;
    std::uint64_t rc = 0;
    const NodeSet r = reach(hminus, i, &rc);
    st.calls += rc;
    st.max_reach = std::max(st.max_reach, rc);
    if (r == NodeSet::full(n)) return false;
    j = r.complement(n);
    return true;
}

DecisionReport general_path(const Operator& op, const GameKind& game, unsigned threads) {
    const std::size_t n = op.dim();
    DecisionReport rep;
    rep.game = game;
    rep.dim = n;
    rep.path = DecisionPath::General;

    const auto hplus = hypergraph_oracle(op, game, Sign::Plus);
    const auto hminus = hypergraph_oracle(op, game, Sign::Minus);
    SearchState total;

    for (std::size_t k = 1; k < n; ++k) {
        std::vector<NodeSet> level;
        for_each_subset_of_size(n, k, [&](NodeSet s) {
            level.push_back(s);
            return true;
        });

        const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(level.size())));
        std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
        std::vector<LevelHit> hits(workers);
        std::vector<SearchState> states(workers);

        auto work = [&](unsigned w) {
            for (std::size_t idx = w; idx < level.size(); idx += workers) {
                if (idx > best.load(std::memory_order_relaxed)) return;
                NodeSet j;
                if (try_candidate(hplus, hminus, n, level[idx], j, states[w])) {
                    hits[w] = {idx, level[idx], j};
                    auto cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                    return;
                }
            }
        };

        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& t : pool) t.join();
        }

        for (const auto& s : states) {
            total.calls += s.calls;
            total.max_reach = std::max(total.max_reach, s.max_reach);
        }
        auto first = std::min_element(hits.begin(), hits.end(),
                                      [](const LevelHit& a, const LevelHit& b) { return a.index < b.index; });
        if (first->index != std::numeric_limits<std::size_t>::max()) {
            rep.verdict = Verdict::DisjointDominions;
            rep.min_dominion = first->min_dominion;
            rep.max_dominion = first->max_dominion;
            break;
        }
    }
    rep.oracle_calls = total.calls;
    rep.max_reach_calls = total.max_reach;
    return rep;
}

DecisionReport convex_path(const Operator& op, const GameKind& game) {
    if (!op.is_convex()) throw std::invalid_argument("convex fast path requires a convex operator");
    const std::size_t n = op.dim();
    DecisionReport rep;
    rep.game = game;
    rep.dim = n;
    rep.path = DecisionPath::ConvexFast;

    OracleCounter counter;
    const auto finals = final_classes(build_digraph(op, game, counter));
    if (finals.size() >= 2) {
        // final classes are closed, hence dominions of both players
        rep.verdict = Verdict::DisjointDominions;
        rep.min_dominion = finals[0];
        rep.max_dominion = finals[1];
    } else {
        const NodeSet c = finals.front();
        std::uint64_t rc = 0;
        const NodeSet r = reach(hypergraph_oracle(op, game, Sign::Minus, counter), c, &rc);
        rep.max_reach_calls = rc;
        if (r != NodeSet::full(n)) {
            rep.verdict = Verdict::DisjointDominions;
            rep.min_dominion = c;
            rep.max_dominion = r.complement(n);
        }
    }
    rep.oracle_calls = counter.value();
    return rep;
}

double resolve_tie_tolerance(const Operator& op, std::span<const double> u, std::optional<double> tie) {
    if (tie) {
        if (!(*tie >= 0.0) || !std::isfinite(*tie)) throw std::invalid_argument("tie tolerance must be finite and >= 0");
        return *tie;
    }
    return std::max(1e-12, 100.0 * ergodic_residual(op, u, best_eigenvalue(op, u)));
}

}  // namespace

DecisionReport decide(const Operator& op, const GameKind& game, const DecideOptions& opts) {
    if (game.is_local() && game.point().size() != op.dim())
        throw std::invalid_argument("local game point has wrong dimension");
    if (opts.threads == 0) throw std::invalid_argument("threads must be at least 1");
    using P = DecideOptions::Path;
    const bool fast = opts.path == P::ConvexFast || (opts.path == P::Auto && op.is_convex());
    return fast ? convex_path(op, game) : general_path(op, game, opts.threads);
}

DecisionReport decide_existence(const Operator& op, const DecideOptions& opts) {
    return decide(op, GameKind::at_infinity(), opts);
}

GameKind uniqueness_game(const Operator& op, std::span<const double> u, std::optional<double> tie_tolerance) {
    if (u.size() != op.dim()) throw std::invalid_argument("point has wrong dimension");
    LocalOptions lo;
    lo.tie_tolerance = resolve_tie_tolerance(op, u, tie_tolerance);
    return GameKind::local_at(std::vector<double>(u.begin(), u.end()), lo);
}

DecisionReport decide_uniqueness(const Operator& op, std::span<const double> u, const DecideOptions& opts) {
    if (u.size() != op.dim()) throw std::invalid_argument("point has wrong dimension");
    const double res = ergodic_residual(op, u, best_eigenvalue(op, u));
    if (!(res <= kErgodicResidualTolerance)) {
        std::ostringstream msg;
        msg << "u is not an eigenvector: residual " << res << " exceeds " << kErgodicResidualTolerance;
        throw std::invalid_argument(msg.str());
    }
    return decide(op, uniqueness_game(op, u, opts.tie_tolerance), opts);
}

DecisionReport brute_force_decide(const Operator& op, const GameKind& game) {
    const std::size_t n = op.dim();
    if (n > 5) throw std::length_error("brute force decision requires n <= 5");
    DecisionReport rep;
    rep.game = game;
    rep.dim = n;
    rep.path = DecisionPath::BruteForce;
    const auto mins = dominions(op, game, Player::Min);
    const auto maxs = dominions(op, game, Player::Max);
    for (auto i : mins)
        for (auto j : maxs)
            if (!i.intersects(j)) {
                rep.verdict = Verdict::DisjointDominions;
                rep.min_dominion = i;
                rep.max_dominion = j;
                return rep;
            }
    return rep;
}

DecisionReport brute_force_existence(const Operator& op) { return brute_force_decide(op, GameKind::at_infinity()); }

DominionCertificate certify_disjoint_dominions(const Operator& op, const DecisionReport& report, std::size_t steps) {
    if (!report.disjoint()) throw std::invalid_argument("certificate needs a DisjointDominions report");
    if (report.game.is_local())
        throw std::invalid_argument("certificate applies to dominions of the game at infinity only");
    if (steps == 0) throw std::invalid_argument("certificate needs at least one step");
    const std::size_t n = op.dim();
    const NodeSet I = report.min_dominion, J = report.max_dominion;
    if (I.empty() || J.empty() || I.intersects(J) || !(I | J).subset_of(NodeSet::full(n)))
        throw std::invalid_argument("certificate needs disjoint nonempty dominions");

    // alpha <= T_l(0), T_j(t e_J) - t; beta >= T_l(0), T_i(t e_notI) for all t >= 0.
    // The t-dependent terms are monotone in t, so their limits are the extremes.
    const std::vector<double> zero(n, 0.0);
    const auto t0 = eval(op, zero);
    double alpha = *std::min_element(t0.begin(), t0.end());
    double beta = *std::max_element(t0.begin(), t0.end());
    const NodeSet notI = I.complement(n), notJ = J.complement(n);
    for (auto i : I.members()) {
        if (notI.empty()) continue;
        const auto lim = eval_ext(op, i, {notI, Sign::Plus});
        if (!lim.is_finite()) throw std::invalid_argument("I is not a Min dominion of the game at infinity");
        beta = std::max(beta, lim.value());
    }
    for (auto j : J.members()) {
        if (notJ.empty()) continue;
        const auto lim = eval_ext(op, j, {notJ, Sign::Minus});
        if (!lim.is_finite()) throw std::invalid_argument("J is not a Max dominion of the game at infinity");
        alpha = std::min(alpha, lim.value());
    }

    DominionCertificate cert;
    cert.alpha = alpha;
    cert.beta = beta;
    cert.s = std::ceil(beta - alpha) + 1.0;
    cert.steps = steps;

    std::vector<double> g(n, 0.0);
    for (auto j : J.members()) g[j] = cert.s;
    const Operator S = perturb_diagonal(op, g);

    std::vector<double> x(n, 0.0);
    bool ok = true;
    for (std::size_t k = 1; k <= steps; ++k) {
        x = eval(S, x);
        const double kd = static_cast<double>(k);
        const double tol = 1e-9 * (1.0 + kd * (cert.s + std::abs(alpha) + std::abs(beta)));
        for (std::size_t l = 0; l < n; ++l) {
            const double lo = kd * ((J.contains(l) ? cert.s : 0.0) + alpha);
            const double hi = kd * ((notI.contains(l) ? cert.s : 0.0) + beta);
            if (x[l] < lo - tol || x[l] > hi + tol) ok = false;
        }
    }
    double jmin = std::numeric_limits<double>::infinity(), imax = -jmin;
    for (auto j : J.members()) jmin = std::min(jmin, x[j]);
    for (auto i : I.members()) imax = std::max(imax, x[i]);
    cert.separation = (jmin - imax) / static_cast<double>(steps);
    cert.verified = ok;
    return cert;
}

SecondEigenvectorResult second_eigenvector(const Operator& op, std::span<const double> u, NodeSet min_dominion,
                                           NodeSet max_dominion, std::optional<double> tie_tolerance) {
    const std::size_t n = op.dim();
    if (u.size() != n) throw std::invalid_argument("point has wrong dimension");
    const NodeSet I = min_dominion, J = max_dominion, full = NodeSet::full(n);
    if (I.empty() || J.empty() || I.intersects(J) || !(I | J).subset_of(full))
        throw std::invalid_argument("second_eigenvector needs disjoint nonempty sets");

    LocalOptions lo;
    lo.tie_tolerance = resolve_tie_tolerance(op, u, tie_tolerance);
    const double lambda = best_eigenvalue(op, u);
    const std::vector<double> base(u.begin(), u.end());

    auto tilde = [&](const std::vector<double>& x) {
        std::vector<double> p(n);
        for (std::size_t l = 0; l < n; ++l) p[l] = base[l] + x[l];
        auto t = eval(op, p);
        for (std::size_t l = 0; l < n; ++l) t[l] -= lambda + base[l];
        return t;
    };
    const auto t_at_zero = tilde(std::vector<double>(n, 0.0));
    const double slack = 10.0 * lo.tie_tolerance;

    // exact constancy of T_i along e_notI (i in I) and along -e_notJ (j in J)
    auto constant_at = [&](double eps) {
        std::vector<double> up(n, 0.0), down(n, 0.0);
        for (auto l : I.complement(n).members()) up[l] = eps;
        for (auto l : J.complement(n).members()) down[l] = -eps;
        const auto tu = tilde(up), td = tilde(down);
        for (auto i : I.members())
            if (std::abs(tu[i] - t_at_zero[i]) > slack) return false;
        for (auto j : J.members())
            if (std::abs(td[j] - t_at_zero[j]) > slack) return false;
        return true;
    };

    SecondEigenvectorResult out;
    out.lambda = lambda;
    double eps = 0.5 * std::min(breakpoint_radius(op, u, lo), 1.0);
    int halvings = 0;
    while (!constant_at(eps)) {
        eps *= 0.5;
        if (++halvings > 60) throw std::runtime_error("second_eigenvector: no constancy radius found");
    }
    out.epsilon = eps;

    std::vector<double> x(n, 0.0);
    for (auto j : J.members()) x[j] = eps;
    const NodeSet L = (I | J).complement(n);
    for (auto l : L.members()) x[l] = eps;

    bool settled = L.empty();
    std::size_t it = 0;
    while (!settled && it < 100000) {
        ++it;
        const auto t = tilde(x);
        double step = 0.0;
        for (auto l : L.members()) {
            const double y = std::clamp(t[l], 0.0, eps);
            step = std::max(step, std::abs(y - x[l]));
            x[l] = y;
        }
        if (step < 1e-12) settled = true;
    }
    out.iterations = it;

    out.v.resize(n);
    for (std::size_t l = 0; l < n; ++l) out.v[l] = base[l] + x[l];
    out.residual = ergodic_residual(op, out.v, lambda);
    const auto [mn, mx] = std::minmax_element(x.begin(), x.end());
    out.converged = settled && out.residual <= 1e-9 && (*mx - *mn) >= 0.5 * eps;
    return out;
}

}  // namespace pfgame
