// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "property_checks.hpp"
#include "support.hpp"

using namespace pfgame;
using pft::arc;
using pft::S;
using pft::sets_from_labels;

namespace {

// tolerances
constexpr double kResidual = 1e-8;        // ergodic and tensor residuals
constexpr double kSecondResidual = 1e-9;  // T(v) = v for the second eigenvector
constexpr double kShapeTol = 1e-6;        // eigenvector shape up to an additive constant
constexpr double kSeparationSlack = 1e-6;

// runtime limits in seconds
constexpr double kExampleLimit = 1.0;
constexpr double kSolveLimit = 5.0;
constexpr double kDifferentialLimit = 300.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Collects failed checks with a short reason.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && first_.empty()) first_ = what;
        ok_ = ok_ && ok;
    }
    bool ok() const { return ok_; }
    const std::string& reason() const { return first_; }

private:
    bool ok_ = true;
    std::string first_;
};

bool same_shape(const std::vector<double>& u, const std::vector<double>& want) {
    const double c = u.back() - want.back();
    for (std::size_t i = 0; i < u.size(); ++i)
        if (std::abs(u[i] - c - want[i]) > kShapeTol) return false;
    return true;
}

bool nonconstant(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return hilbert_seminorm(d) > kShapeTol;
}

bool actions_match(const Operator& op, const GameKind& g, Player p,
                   std::initializer_list<std::initializer_list<std::initializer_list<int>>> lists) {
    std::size_t i = 0;
    for (auto l : lists)
        if (actions(op, g, p, i++) != sets_from_labels(l)) return false;
    return true;
}

std::vector<Hyperarc> minimal_arcs(const Operator& op, Sign s) {
    return build_hypergraph(op, GameKind::at_infinity(), s).minimal().sorted().arcs();
}

std::vector<Hyperarc> arcs_of(std::size_t n, std::vector<Hyperarc> a) { return Hypergraph(n, std::move(a)).sorted().arcs(); }

// ---------------------------------------------------------------- criteria

Check running_example() {
    Check c;
    const auto t0 = Clock::now();
    const auto op = pft::load_operator("running_example.op");
    const auto g = GameKind::at_infinity();
    c.expect(actions_match(op, g, Player::Min, {{{1, 2}, {1, 3}, {1, 2, 3}}, {{1, 3}, {1, 2, 3}}, {{1, 3}, {1, 2, 3}}}),
             "Min actions");
    c.expect(actions_match(op, g, Player::Max, {{{1, 2, 3}}, {{1, 3}, {1, 2, 3}}, {{3}, {1, 3}, {2, 3}, {1, 2, 3}}}),
             "Max actions");
    c.expect(dominions(op, g, Player::Min) == sets_from_labels({{1, 3}, {1, 2, 3}}), "Min dominions");
    c.expect(dominions(op, g, Player::Max) == sets_from_labels({{3}, {1, 2, 3}}), "Max dominions");
    c.expect(decide_existence(op).verdict == Verdict::NoDisjointDominions, "verdict");
    const auto s = solve_ergodic(op, std::vector<double>(3, 0.0));
    c.expect(s.converged() && s.witness.residual < kResidual, "solve converges");
    c.expect(std::abs(s.witness.lambda) < kShapeTol, "lambda = 0");
    c.expect(same_shape(s.witness.u, {0, 0, 2}), "u = (0,0,2) + c");
    c.expect(seconds_since(t0) < kExampleLimit, "runtime");
    return c;
}

Check uniqueness_example() {
    Check c;
    const auto t0 = Clock::now();
    const auto op = pft::load_operator("running_example.op");
    const std::vector<double> u{0, 0, 2};
    const auto g = GameKind::local_at(u);
    c.expect(actions_match(op, g, Player::Min, {{{1, 2}, {1, 3}, {1, 2, 3}}, {{1, 2}, {1, 2, 3}}, {{1, 3}, {1, 2, 3}}}),
             "Min actions");
    c.expect(actions_match(op, g, Player::Max, {{{1, 2, 3}}, {{1, 2}, {1, 2, 3}}, {{3}, {1, 3}, {2, 3}, {1, 2, 3}}}),
             "Max actions");
    const auto r = decide_uniqueness(op, u);
    c.expect(r.disjoint() && r.min_dominion == S({1, 2}) && r.max_dominion == S({3}), "verdict ({1,2},{3})");
    if (r.disjoint()) {
        const auto v = second_eigenvector(op, u, r.min_dominion, r.max_dominion);
        c.expect(v.converged && ergodic_residual(op, v.v, 0.0) <= kSecondResidual, "T(v) = v");
        c.expect(nonconstant(v.v, u), "v - u nonconstant");
    }
    c.expect(slice_membership(op, std::vector<double>{0, 0, 3}, 0.0, 0.0), "(0,0,3) in the zero slice");
    c.expect(seconds_since(t0) < kExampleLimit, "runtime");
    return c;
}

Check blackmailer() {
    Check c;
    const auto op = pft::load_operator("blackmailer.op");
    const auto g = GameKind::at_infinity();
    c.expect(actions_match(op, g, Player::Min,
                           {{{1, 2}, {1, 3}, {1, 2, 3}}, {{3}, {1, 3}, {2, 3}, {1, 2, 3}}, {{3}, {1, 3}, {2, 3}, {1, 2, 3}}}),
             "Min actions");
    c.expect(actions_match(op, g, Player::Max, {{{2, 3}, {1, 2, 3}}, {{1, 3}, {1, 2, 3}}, {{3}, {1, 3}, {2, 3}, {1, 2, 3}}}),
             "Max actions");
    c.expect(dominions(op, g, Player::Min) == sets_from_labels({{3}, {1, 3}, {2, 3}, {1, 2, 3}}), "Min dominions");
    c.expect(dominions(op, g, Player::Max) == sets_from_labels({{3}, {1, 2, 3}}), "Max dominions");
    c.expect(decide_existence(op).verdict == Verdict::NoDisjointDominions, "verdict");

    const auto hm = build_hypergraph(op, g, Sign::Minus);
    std::vector<NodeSet> inv;
    for_each_subset(3, false, [&](NodeSet J) {
        if (is_invariant(hm, J)) inv.push_back(J);
        return true;
    });
    c.expect(inv == std::vector<NodeSet>{S({1, 2})}, "H- invariant sets");

    const auto rec = recession(op);
    c.expect(rec == parse_operator("operator n=3\nT1 := max(x1, min(x2, x3))\nT2 := min(x1, x3)\nT3 := x3\n"),
             "recession operator");
    c.expect(eval(rec, std::vector<double>{1, 0, 0}) == std::vector<double>{1, 0, 0}, "recession fixes (1,0,0)");

    std::mt19937 rng(2024);
    for (int k = 0; k < 20; ++k) {
        const auto gv = pft::random_vector(rng, 3, 2.0);
        const auto t0 = Clock::now();
        const auto s = solve_ergodic(perturb_diagonal(op, gv), std::vector<double>(3, 0.0));
        c.expect(s.converged() && s.witness.residual < kResidual, "solve on g + T");
        c.expect(seconds_since(t0) < kSolveLimit, "solve runtime");
    }
    return c;
}

Check hypergraph_arcs() {
    Check c;
    const auto run = pft::load_operator("running_example.op");
    const auto bm = pft::load_operator("blackmailer.op");
    c.expect(minimal_arcs(run, Sign::Plus) == arcs_of(3, {arc({1}, 2), arc({3}, 2), arc({1}, 3), arc({2, 3}, 1)}),
             "running H+");
    const auto hminus = arcs_of(3, {arc({2}, 1), arc({3}, 1), arc({1}, 2), arc({3}, 2)});
    c.expect(minimal_arcs(run, Sign::Minus) == hminus, "running H-");
    c.expect(minimal_arcs(bm, Sign::Plus) == arcs_of(3, {arc({2, 3}, 1), arc({3}, 2)}), "blackmailer H+");
    c.expect(minimal_arcs(bm, Sign::Minus) == hminus, "blackmailer H-");

    const auto p = TensorPattern::of(pft::load_tensor("pattern4.tns"));
    c.expect(materialize(tensor_hypergraph(p)).minimal().sorted().arcs() ==
                 arcs_of(4, {arc({2}, 1), arc({1, 2}, 3), arc({1, 3}, 4)}),
             "tensor H(F)");
    std::vector<std::pair<std::size_t, std::size_t>> loopfree;
    for (auto a : tensor_digraph(p).arcs)
        if (a.first != a.second) loopfree.push_back(a);
    std::sort(loopfree.begin(), loopfree.end());
    const std::vector<std::pair<std::size_t, std::size_t>> want{{0, 1}, {1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 2}};
    c.expect(loopfree == want, "tensor G(F)");
    return c;
}

Check tensor_example() {
    Check c;
    const auto t = pft::load_tensor("pattern4.tns");
    const auto p = TensorPattern::of(t);
    const auto finals = final_classes(tensor_digraph(p));
    c.expect(finals == std::vector<NodeSet>{S({1, 2})}, "unique final class {1,2}");
    c.expect(reach(tensor_hypergraph(p), S({1, 2})) == S({1, 2, 3, 4}), "reach is everything");
    const auto e = tensor_eigenpair(t);
    c.expect(e.converged() && e.pair.residual < kResidual, "eigenpair residual");

    std::mt19937 rng(53);
    const auto base = decide_existence(tensor_to_operator(t)).verdict;
    c.expect(base == Verdict::NoDisjointDominions, "no disjoint dominions");
    for (int k = 0; k < 20; ++k) {
        const auto w = pft::reweight(t, rng);
        const auto op = tensor_to_operator(w);
        DecideOptions gen, fast;
        gen.path = DecideOptions::Path::General;
        fast.path = DecideOptions::Path::ConvexFast;
        c.expect(decide_existence(op, gen).verdict == base && decide_existence(op, fast).verdict == base,
                 "verdict stable under reweighting");
        const auto we = tensor_eigenpair(w);
        c.expect(we.converged() && we.pair.residual < kResidual, "reweighted eigenpair");
    }
    return c;
}

Check signature_suite() {
    Check c;
    const auto e = parse_expr(
        "max(mean(-3; 0.5:min(x1, 0.6931471805599453 + x2), 0.5:(1.1447298858494002 + x1)), "
        "2.8903717578961645 + avg(0.25:x1, 0.75:x2))",
        2);
    const auto sig = signature(e);
    std::mt19937 rng(6);
    for (int t = 0; t < 200; ++t) {
        const auto x = pft::random_vector(rng, 2);
        c.expect(std::abs(eval(sig, x) - 0.5 * (x[0] + x[1])) < 1e-12, "signature is (x1 + x2) / 2");
    }
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto op = pft::random_mean_operator(rng, n);
        const auto so = signature(op);
        for_each_subset(n, true, [&](NodeSet J) {
            for (Sign s : {Sign::Plus, Sign::Minus})
                for (std::size_t i = 0; i < n; ++i)
                    c.expect(eval_ext(op, i, {J, s}).tag() == eval_ext(so, i, {J, s}).tag(), "oracle equality");
            return true;
        });
    }
    return c;
}

// Criteria 7, 8 and 10 share one pass over the differential corpus.
struct DifferentialOutcome {
    Check differential, certificates, budget;
    std::size_t instances = 0, disjoint = 0;
    double seconds = 0.0;
};

DifferentialOutcome differential_suite() {
    DifferentialOutcome out;
    const auto t0 = Clock::now();

    auto audit = [&](const Operator& op, const DecisionReport& r) {
        const std::size_t n = op.dim();
        out.budget.expect(r.max_reach_calls <= n * n, "reach exceeded n^2 oracle calls");
        if (!r.disjoint()) return;
        ++out.disjoint;
        const auto c50 = certify_disjoint_dominions(op, r, 50);
        out.certificates.expect(c50.verified, "sandwich for k <= 50");
        const auto c1000 = certify_disjoint_dominions(op, r, 1000);
        out.certificates.expect(c1000.separation >= c1000.s - (c1000.beta - c1000.alpha) - kSeparationSlack,
                                "separation at k = 1000");
    };

    auto compare = [&](const Operator& op) {
        ++out.instances;
        const auto r = decide_existence(op);
        const auto b = brute_force_existence(op);
        out.differential.expect(r.verdict == b.verdict, "verdict differs from brute force:\n" + to_dsl(op));
        audit(op, r);
    };

    for (std::size_t n = 1; n <= 3; ++n) pft::for_each_grammar_operator(n, compare);

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) compare(pft::random_minmax_operator(rng, 4));

    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 2 + t % 9;
        const auto op = tensor_to_operator(pft::random_tensor(rng, n, 2 + t % 2, 1.5 / static_cast<double>(n * n), false));
        DecideOptions gen, fast;
        gen.path = DecideOptions::Path::General;
        fast.path = DecideOptions::Path::ConvexFast;
        const auto rg = decide_existence(op, gen), rf = decide_existence(op, fast);
        ++out.instances;
        out.differential.expect(rg.verdict == rf.verdict, "fast path differs:\n" + to_dsl(op));
        audit(op, rg);
    }

    out.seconds = seconds_since(t0);
    out.differential.expect(out.seconds < kDifferentialLimit, "runtime");
    return out;
}

Check property_suites() {
    Check c;
    constexpr int kTrials = 1000;
    const std::pair<const char*, std::function<pft::Failure()>> suites[] = {
        {"monotonicity", [] { return pft::check_monotonicity(kTrials, 901); }},
        {"homogeneity", [] { return pft::check_homogeneity(kTrials, 902); }},
        {"nonexpansiveness", [] { return pft::check_nonexpansive(kTrials, 903); }},
        {"oracle tail monotonicity", [] { return pft::check_oracle_tail_monotone(kTrials, 904); }},
        {"reach closure", [] { return pft::check_reach_closure(kTrials, 905); }},
        {"action intersection", [] { return pft::check_actions_intersect(kTrials, 906); }},
        {"hyperarc shift invariance", [] { return pft::check_shift_invariant_hyperarcs(kTrials, 907); }},
        {"permutation equivariance", [] { return pft::check_permutation_equivariance(kTrials, 908); }},
    };
    for (const auto& [name, run] : suites) {
        const auto f = run();
        c.expect(!f.has_value(), f ? *f : std::string(name));
    }
    return c;
}

bool report(int id, const std::string& title, const Check& c, const std::string& extra = "") {
    std::cout << "criterion " << id << ": " << (c.ok() ? "PASS" : "FAIL") << "  " << title;
    if (!extra.empty()) std::cout << " (" << extra << ")";
    if (!c.ok()) std::cout << "  -- " << c.reason();
    std::cout << "\n";
    return c.ok();
}

}  // namespace

int main() {
    bool all = true;
    all &= report(1, "running example", running_example());
    all &= report(2, "uniqueness example", uniqueness_example());
    all &= report(3, "blackmailer", blackmailer());
    all &= report(4, "hypergraph arc sets", hypergraph_arcs());
    all &= report(5, "tensor example", tensor_example());
    all &= report(6, "signature", signature_suite());
    const auto d = differential_suite();
    std::ostringstream stats;
    stats << d.instances << " instances, " << d.seconds << " s";
    all &= report(7, "differential testing", d.differential, stats.str());
    all &= report(8, "dominion certificates", d.certificates, std::to_string(d.disjoint) + " disjoint verdicts");
    all &= report(9, "property suites", property_suites());
    all &= report(10, "oracle-call budget", d.budget);
    return all ? 0 : 1;
}
