#include "pfgame/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace pfgame {

void SolveConfig::validate() const {
    if (!(tolerance > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
    if (!(damping > 0.0 && damping <= 1.0)) throw std::invalid_argument("damping must lie in (0, 1]");
    if (max_iters == 0) throw std::invalid_argument("max_iters must be positive");
}

double hilbert_seminorm(std::span<const double> x) {
    if (x.empty()) return 0.0;
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo;
}

double ergodic_residual(const Operator& op, std::span<const double> u, double lambda) {
    auto t = eval(op, u);
    double r = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) r = std::max(r, std::abs(t[i] - lambda - u[i]));
    return r;
}

double best_eigenvalue(const Operator& op, std::span<const double> u) {
    auto t = eval(op, u);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] -= u[i];
    auto [lo, hi] = std::minmax_element(t.begin(), t.end());
    return 0.5 * (*lo + *hi);
}

SolveResult solve_ergodic(const Operator& op, std::span<const double> x0, const SolveConfig& cfg) {
    cfg.validate();
    const std::size_t n = op.dim();
    if (x0.size() != n) throw std::invalid_argument("solve_ergodic: initial point has wrong dimension");
    std::vector<double> x(x0.begin(), x0.end());
    const double anchor = x[n - 1];
    const double theta = cfg.damping;

    std::deque<double> drifts;
    auto mean_drift = [&] { return std::accumulate(drifts.begin(), drifts.end(), 0.0) / static_cast<double>(drifts.size()); };
    std::vector<double> y(n);
    bool settled = false;
    std::size_t it = 0;
    while (it < cfg.max_iters) {
        ++it;
        auto t = eval(op, x);
        for (std::size_t i = 0; i < n; ++i) y[i] = (1.0 - theta) * x[i] + theta * t[i];
        const double drift = y[n - 1] - anchor;
        double lo = 0.0, hi = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            y[i] -= drift;
            const double d = y[i] - x[i];
            if (i == 0 || d < lo) lo = d;
            if (i == 0 || d > hi) hi = d;
        }
        drifts.push_back(drift / theta);
        if (drifts.size() > 10) drifts.pop_front();
        x.swap(y);
        // the drift average lags the iterate, so keep going until it catches up
        if (hi - lo < cfg.tolerance) {
            settled = true;
            if (ergodic_residual(op, x, mean_drift()) < kErgodicResidualTolerance) break;
        }
    }

    SolveResult res;
    res.witness.u = x;
    res.witness.lambda = mean_drift();
    res.witness.residual = ergodic_residual(op, x, res.witness.lambda);
    res.witness.iterations = it;
    res.status = settled && res.witness.residual < kErgodicResidualTolerance ? SolveStatus::Converged
                                                                            : SolveStatus::NonConvergence;
    return res;
}

std::vector<double> mean_payoff(const Operator& op, std::size_t k) {
    if (k == 0) throw std::invalid_argument("mean_payoff: k must be at least 1");
    std::vector<double> x(op.dim(), 0.0);
    const auto t0 = eval(op, x);
    double bound0 = 0.0;
    for (double v : t0) bound0 = std::max(bound0, std::abs(v));
    for (std::size_t step = 1; step <= k; ++step) {
        x = eval(op, x);
        // nonexpansiveness: |T^k(0)| <= k |T(0)|
        const double bound = static_cast<double>(step) * (bound0 + 1.0);
        for (double v : x)
            if (!(std::abs(v) <= bound)) throw std::overflow_error("mean_payoff: iterate exceeds the linear growth bound");
    }
    for (auto& v : x) v /= static_cast<double>(k);
    return x;
}

bool slice_membership(const Operator& op, std::span<const double> x, double alpha, double beta, double tol) {
    auto t = eval(op, x);
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double slack = tol * std::max(1.0, std::abs(t[i]));
        if (t[i] < alpha + x[i] - slack || t[i] > beta + x[i] + slack) return false;
    }
    return true;
}

Operator perturb_diagonal(const Operator& op, std::span<const double> g) {
    if (g.size() != op.dim()) throw std::invalid_argument("perturb_diagonal: g has wrong dimension");
    std::vector<Expr> coords;
    for (std::size_t i = 0; i < op.dim(); ++i) {
        if (!std::isfinite(g[i])) throw std::invalid_argument("perturb_diagonal: g must be finite");
        coords.push_back(g[i] == 0.0 ? op.coord(i) : shift(g[i], op.coord(i)));
    }
    return Operator(op.dim(), std::move(coords)).with_convexity(op.convexity());
}

TensorSolveResult tensor_eigenpair(const Tensor& t, const SolveConfig& cfg) {
    const Operator op = tensor_to_operator(t);
    const std::vector<double> x0(t.dim, 0.0);
    // errors in the log domain are amplified by about lambda (d - 1) after exp
    SolveConfig inner = cfg;
    inner.tolerance = std::min(cfg.tolerance, 1e-13);
    const SolveResult sr = solve_ergodic(op, x0, inner);

    const double degree = static_cast<double>(t.order - 1);
    TensorSolveResult out;
    out.status = sr.status;
    out.pair.iterations = sr.witness.iterations;
    out.pair.lambda = std::exp(sr.witness.lambda * degree);
    const auto& v = sr.witness.u;
    const double top = *std::max_element(v.begin(), v.end());
    out.pair.u.resize(t.dim);
    for (std::size_t i = 0; i < t.dim; ++i) out.pair.u[i] = std::exp(v[i] - top);

    const auto fu = apply_tensor(t, out.pair.u);
    double scale = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < t.dim; ++i) {
        const double p = std::pow(out.pair.u[i], degree);
        scale = std::max(scale, p);
        worst = std::max(worst, std::abs(fu[i] - out.pair.lambda * p));
    }
    out.pair.residual = worst / scale;
    return out;
}

}  // namespace pfgame
