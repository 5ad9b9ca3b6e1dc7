#include "pfgame/expr.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace pfgame {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightSumTolerance = 1e-12;

void check_children(const std::vector<Expr>& children, const char* what) {
    if (children.empty()) throw ExprError(std::string(what) + " needs at least one child");
    for (const auto& c : children)
        if (!c) throw ExprError(std::string(what) + " has a null child");
}

Node weighted_node(NodeKind kind, double r, std::vector<std::pair<double, Expr>> terms, const char* what) {
    if (terms.empty()) throw ExprError(std::string(what) + " needs at least one term");
    double sum = 0.0;
    Node n;
    n.kind = kind;
    n.r = r;
    for (auto& [w, e] : terms) {
        if (!std::isfinite(w) || w < 0.0)
            throw ExprError(std::string(what) + ": weights must be finite and nonnegative");
        if (!e) throw ExprError(std::string(what) + " has a null child");
        sum += w;
        if (w == 0.0) continue;  // pruned so that 0 * inf never arises
        n.weights.push_back(w);
        n.children.push_back(std::move(e));
    }
    if (n.children.empty()) throw ExprError(std::string(what) + ": at least one weight must be positive");
    if (std::abs(sum - 1.0) > kWeightSumTolerance) {
        std::ostringstream os;
        os << what << ": weights sum to " << std::setprecision(17) << sum << ", expected 1";
        throw ExprError(os.str());
    }
    return n;
}

bool is_max_like(const Node& n) {
    return n.kind == NodeKind::Max || (n.kind == NodeKind::Mean && n.r == kInf);
}
bool is_min_like(const Node& n) {
    return n.kind == NodeKind::Min || (n.kind == NodeKind::Mean && n.r == -kInf);
}

// (1/r) log sum_k w_k exp(r v_k), for finite nonzero r.
double power_mean_log(double r, std::span<const double> w, std::span<const double> v) {
    double top = -kInf;
    for (double x : v) top = std::max(top, r * x);
    double acc = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) acc += w[k] * std::exp(r * v[k] - top);
    return (top + std::log(acc)) / r;
}

double tie_scale(double v, const LocalOptions& opts) {
    return opts.tie_tolerance * std::max(1.0, std::abs(v));
}

}  // namespace

Expr make_node(Node n) { return Expr(std::make_shared<const Node>(std::move(n))); }

std::size_t Expr::arity() const {
    const Node& n = node();
    if (n.kind == NodeKind::Var) return n.var + 1;
    std::size_t a = 0;
    for (const auto& c : n.children) a = std::max(a, c.arity());
    return a;
}

bool operator==(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
    case NodeKind::Var:
        return x.var == y.var;
    case NodeKind::Shift:
        if (x.constant != y.constant) return false;
        break;
    case NodeKind::Mean:
        if (x.r != y.r) return false;
        [[fallthrough]];
    case NodeKind::Avg:
        if (x.weights != y.weights) return false;
        break;
    default:
        break;
    }
    return x.children == y.children;
}

Expr var(std::size_t i) {
    if (i >= kMaxNodes) throw ExprError("variable index out of range");
    Node n;
    n.kind = NodeKind::Var;
    n.var = i;
    return make_node(std::move(n));
}

Expr shift(double c, Expr child) {
    if (!std::isfinite(c)) throw ExprError("shift constant must be finite");
    if (!child) throw ExprError("shift has a null child");
    Node n;
    n.kind = NodeKind::Shift;
    n.constant = c;
    n.children.push_back(std::move(child));
    return make_node(std::move(n));
}

Expr min_of(std::vector<Expr> children) {
    check_children(children, "min");
    Node n;
    n.kind = NodeKind::Min;
    n.children = std::move(children);
    return make_node(std::move(n));
}

Expr max_of(std::vector<Expr> children) {
    check_children(children, "max");
    Node n;
    n.kind = NodeKind::Max;
    n.children = std::move(children);
    return make_node(std::move(n));
}

Expr avg(std::vector<std::pair<double, Expr>> terms) {
    return make_node(weighted_node(NodeKind::Avg, 0.0, std::move(terms), "avg"));
}

Expr mean(double r, std::vector<std::pair<double, Expr>> terms) {
    if (std::isnan(r)) throw ExprError("mean order must not be NaN");
    return make_node(weighted_node(NodeKind::Mean, r, std::move(terms), "mean"));
}

Expr supmix(Expr a, Expr b) {
    if (!a || !b) throw ExprError("supmix has a null child");
    Node n;
    n.kind = NodeKind::SupMix;
    n.children = {std::move(a), std::move(b)};
    return make_node(std::move(n));
}

Expr infmix(Expr a, Expr b) {
    if (!a || !b) throw ExprError("infmix has a null child");
    Node n;
    n.kind = NodeKind::InfMix;
    n.children = {std::move(a), std::move(b)};
    return make_node(std::move(n));
}

Convexity syntactic_convexity(const Expr& e) {
    const Node& n = e.node();
    if (n.kind == NodeKind::Min || n.kind == NodeKind::InfMix) return Convexity::Unknown;
    if (n.kind == NodeKind::Mean && n.r < 0.0) return Convexity::Unknown;
    for (const auto& c : n.children)
        if (syntactic_convexity(c) == Convexity::Unknown) return Convexity::Unknown;
    return Convexity::Convex;
}

Operator::Operator(std::size_t n, std::vector<Expr> coords) : coords_(std::move(coords)) {
    if (n == 0) throw ExprError("operator dimension must be positive");
    NodeSet::check_size(n);
    if (coords_.size() != n)
        throw ExprError("operator of dimension " + std::to_string(n) + " has " + std::to_string(coords_.size()) +
                        " coordinates");
    convexity_ = Convexity::Convex;
    for (std::size_t i = 0; i < n; ++i) {
        if (!coords_[i]) throw ExprError("coordinate " + std::to_string(i + 1) + " is empty");
        if (coords_[i].arity() > n)
            throw ExprError("coordinate " + std::to_string(i + 1) + " uses a variable beyond dimension " +
                            std::to_string(n));
        if (syntactic_convexity(coords_[i]) == Convexity::Unknown) convexity_ = Convexity::Unknown;
    }
}

Operator Operator::with_convexity(Convexity c) const {
    Operator copy = *this;
    copy.convexity_ = c;
    return copy;
}

double mix_h(double z) { return z >= -1.0 ? z : -1.0 - std::log(-z); }

double eval(const Expr& e, std::span<const double> x) {
    const Node& n = e.node();
    switch (n.kind) {
    case NodeKind::Var:
        return x[n.var];
    case NodeKind::Shift:
        return n.constant + eval(n.children[0], x);
    case NodeKind::Min: {
        double v = kInf;
        for (const auto& c : n.children) v = std::min(v, eval(c, x));
        return v;
    }
    case NodeKind::Max: {
        double v = -kInf;
        for (const auto& c : n.children) v = std::max(v, eval(c, x));
        return v;
    }
    case NodeKind::Avg: {
        double v = 0.0;
        for (std::size_t k = 0; k < n.children.size(); ++k) v += n.weights[k] * eval(n.children[k], x);
        return v;
    }
    case NodeKind::Mean: {
        std::vector<double> vals;
        vals.reserve(n.children.size());
        for (const auto& c : n.children) vals.push_back(eval(c, x));
        if (n.r == kInf) return *std::max_element(vals.begin(), vals.end());
        if (n.r == -kInf) return *std::min_element(vals.begin(), vals.end());
        if (n.r == 0.0) {
            double v = 0.0;
            for (std::size_t k = 0; k < vals.size(); ++k) v += n.weights[k] * vals[k];
            return v;
        }
        return power_mean_log(n.r, n.weights, vals);
    }
    case NodeKind::SupMix: {
        double a = eval(n.children[0], x);
        double b = eval(n.children[1], x);
        return a + mix_h(b - a);
    }
    case NodeKind::InfMix: {
        double a = eval(n.children[0], x);
        double b = eval(n.children[1], x);
        return a - mix_h(a - b);
    }
    }
    return 0.0;
}

std::vector<double> eval(const Operator& op, std::span<const double> x) {
    if (x.size() != op.dim()) throw std::invalid_argument("eval: vector length does not match dimension");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("eval: input must be finite");
    std::vector<double> out(op.dim());
    for (std::size_t i = 0; i < op.dim(); ++i) out[i] = eval(op.coord(i), x);
    return out;
}

// ---------------------------------------------------------------------------
// Limit oracle

double ExtValue::value() const {
    if (tag_ == Tag::PosInf) return kInf;
    if (tag_ == Tag::NegInf) return -kInf;
    return value_;
}

std::string to_string(const ExtValue& v) {
    if (v.is_pos_inf()) return "+inf";
    if (v.is_neg_inf()) return "-inf";
    std::ostringstream os;
    os << std::setprecision(17) << v.value();
    return os.str();
}

namespace {

bool ext_less(const ExtValue& a, const ExtValue& b) { return a.value() < b.value(); }

ExtValue ext_eval(const Expr& e, const SignPattern& p,
                  const std::function<void(const Node&, const ExtValue&)>* visit) {
    const Node& n = e.node();
    const ExtValue signed_inf = p.sign == Sign::Plus ? ExtValue::pos_inf() : ExtValue::neg_inf();

    std::vector<ExtValue> vals;
    vals.reserve(n.children.size());
    for (const auto& c : n.children) vals.push_back(ext_eval(c, p, visit));

    auto result = [&]() -> ExtValue {
        switch (n.kind) {
        case NodeKind::Var:
            return p.support.contains(n.var) ? signed_inf : ExtValue::finite(0.0);
        case NodeKind::Shift:
            return vals[0].is_finite() ? ExtValue::finite(n.constant + vals[0].value()) : vals[0];
        case NodeKind::Min:
            return *std::min_element(vals.begin(), vals.end(), ext_less);
        case NodeKind::Max:
            return *std::max_element(vals.begin(), vals.end(), ext_less);
        case NodeKind::Avg:
        case NodeKind::Mean: {
            const bool linear = n.kind == NodeKind::Avg || n.r == 0.0;
            if (n.kind == NodeKind::Mean && n.r == kInf)
                return *std::max_element(vals.begin(), vals.end(), ext_less);
            if (n.kind == NodeKind::Mean && n.r == -kInf)
                return *std::min_element(vals.begin(), vals.end(), ext_less);
            if (linear) {
                double v = 0.0;
                for (std::size_t k = 0; k < vals.size(); ++k) {
                    if (!vals[k].is_finite()) return vals[k];
                    v += n.weights[k] * vals[k].value();
                }
                return ExtValue::finite(v);
            }
            // finite nonzero order: the dominant infinity wins, the other one drops out
            const ExtValue::Tag dominant = n.r > 0.0 ? ExtValue::Tag::PosInf : ExtValue::Tag::NegInf;
            std::vector<double> w, v;
            for (std::size_t k = 0; k < vals.size(); ++k) {
                if (vals[k].tag() == dominant) return vals[k];
                if (vals[k].is_finite()) {
                    w.push_back(n.weights[k]);
                    v.push_back(vals[k].value());
                }
            }
            if (v.empty()) return vals[0];
            return ExtValue::finite(power_mean_log(n.r, w, v));
        }
        case NodeKind::SupMix: {
            const ExtValue& a = vals[0];
            const ExtValue& b = vals[1];
            if (a.is_pos_inf() || b.is_pos_inf()) return ExtValue::pos_inf();
            if (a.is_neg_inf()) return b;
            if (b.is_neg_inf()) return ExtValue::neg_inf();
            return ExtValue::finite(a.value() + mix_h(b.value() - a.value()));
        }
        case NodeKind::InfMix: {
            const ExtValue& a = vals[0];
            const ExtValue& b = vals[1];
            if (a.is_neg_inf() || b.is_neg_inf()) return ExtValue::neg_inf();
            if (a.is_pos_inf()) return b;
            if (b.is_pos_inf()) return ExtValue::pos_inf();
            return ExtValue::finite(a.value() - mix_h(a.value() - b.value()));
        }
        }
        return ExtValue::finite(0.0);
    }();
    if (visit) (*visit)(n, result);
    return result;
}

}  // namespace

ExtValue eval_ext(const Expr& e, const SignPattern& p) { return ext_eval(e, p, nullptr); }

ExtValue eval_ext(const Operator& op, std::size_t i, const SignPattern& p) {
    if (p.support.empty()) throw std::invalid_argument("eval_ext: sign pattern support must be nonempty");
    if (!p.support.subset_of(NodeSet::full(op.dim())))
        throw std::invalid_argument("eval_ext: sign pattern support exceeds dimension");
    return ext_eval(op.coord(i), p, nullptr);
}

ExtValue eval_ext_traced(const Expr& e, const SignPattern& p,
                         const std::function<void(const Node&, const ExtValue&)>& visit) {
    return ext_eval(e, p, &visit);
}

// ---------------------------------------------------------------------------
// Local constancy

namespace {

struct LocalState {
    double value;
    bool constant;
};

LocalState local_eval(const Expr& e, std::span<const double> u, NodeSet dir, Orientation orient,
                      const LocalOptions& opts) {
    const Node& n = e.node();
    if (n.kind == NodeKind::Var) return {u[n.var], !dir.contains(n.var)};

    std::vector<LocalState> cs;
    cs.reserve(n.children.size());
    for (const auto& c : n.children) cs.push_back(local_eval(c, u, dir, orient, opts));
    auto all_const = [&] { return std::all_of(cs.begin(), cs.end(), [](auto& s) { return s.constant; }); };

    if (is_min_like(n) || is_max_like(n)) {
        const bool is_min = is_min_like(n);
        double ext = cs[0].value;
        for (auto& s : cs) ext = is_min ? std::min(ext, s.value) : std::max(ext, s.value);
        const double tol = tie_scale(ext, opts);
        // Moving along the orientation, the extremum over attaining children is
        // pinned as soon as one of them stays put (min/increase, max/decrease);
        // otherwise every attaining child must stay put.
        const bool any_suffices = (is_min && orient == Orientation::Increase) ||
                                  (!is_min && orient == Orientation::Decrease);
        bool any = false, all = true;
        for (auto& s : cs) {
            if (std::abs(s.value - ext) > tol) continue;
            any = any || s.constant;
            all = all && s.constant;
        }
        return {ext, any_suffices ? any : all};
    }

    switch (n.kind) {
    case NodeKind::Shift:
        return {n.constant + cs[0].value, cs[0].constant};
    case NodeKind::Avg:
    case NodeKind::Mean: {
        std::vector<double> vals;
        for (auto& s : cs) vals.push_back(s.value);
        double v;
        if (n.kind == NodeKind::Avg || n.r == 0.0) {
            v = 0.0;
            for (std::size_t k = 0; k < vals.size(); ++k) v += n.weights[k] * vals[k];
        } else {
            v = power_mean_log(n.r, n.weights, vals);
        }
        return {v, all_const()};
    }
    case NodeKind::SupMix:
    case NodeKind::InfMix: {
        // supmix(a,b) = b while b - a >= -1; infmix(a,b) = b while a - b >= -1.
        // Below the breakpoint both children enter strictly.
        const bool sup = n.kind == NodeKind::SupMix;
        const double a = cs[0].value, b = cs[1].value;
        const double z = sup ? b - a : a - b;
        const double value = sup ? a + mix_h(z) : a - mix_h(z);
        const double tol = tie_scale(z, opts);
        bool constant;
        if (z > -1.0 + tol) {
            constant = cs[1].constant;
        } else if (z < -1.0 - tol) {
            constant = cs[0].constant && cs[1].constant;
        } else {
            // At the breakpoint only a move of a that pushes z upward keeps the
            // node on its linear branch.
            const bool a_moves_z_up = sup ? orient == Orientation::Decrease : orient == Orientation::Increase;
            constant = a_moves_z_up ? cs[1].constant : (cs[0].constant && cs[1].constant);
        }
        return {value, constant};
    }
    default:
        break;
    }
    return {0.0, true};
}

double radius_walk(const Expr& e, std::span<const double> u, const LocalOptions& opts, double& value) {
    const Node& n = e.node();
    if (n.kind == NodeKind::Var) {
        value = u[n.var];
        return kInf;
    }
    double radius = kInf;
    std::vector<double> vals(n.children.size());
    for (std::size_t k = 0; k < n.children.size(); ++k)
        radius = std::min(radius, radius_walk(n.children[k], u, opts, vals[k]));

    auto gap_to = [&](double target) {
        const double tol = tie_scale(target, opts);
        for (double v : vals) {
            const double gap = std::abs(v - target);
            if (gap > tol) radius = std::min(radius, gap);
        }
    };

    if (is_min_like(n)) {
        value = *std::min_element(vals.begin(), vals.end());
        gap_to(value);
        return radius;
    }
    if (is_max_like(n)) {
        value = *std::max_element(vals.begin(), vals.end());
        gap_to(value);
        return radius;
    }
    switch (n.kind) {
    case NodeKind::Shift:
        value = n.constant + vals[0];
        break;
    case NodeKind::Avg:
    case NodeKind::Mean:
        if (n.kind == NodeKind::Avg || n.r == 0.0) {
            value = 0.0;
            for (std::size_t k = 0; k < vals.size(); ++k) value += n.weights[k] * vals[k];
        } else {
            value = power_mean_log(n.r, n.weights, vals);
        }
        break;
    case NodeKind::SupMix:
    case NodeKind::InfMix: {
        const bool sup = n.kind == NodeKind::SupMix;
        const double z = sup ? vals[1] - vals[0] : vals[0] - vals[1];
        value = sup ? vals[0] + mix_h(z) : vals[0] - mix_h(z);
        const double gap = std::abs(z + 1.0);
        if (gap > tie_scale(z, opts)) radius = std::min(radius, gap);
        break;
    }
    default:
        break;
    }
    return radius;
}

}  // namespace

bool locally_constant(const Expr& e, std::span<const double> u, NodeSet direction, Orientation orientation,
                      const LocalOptions& opts) {
    return local_eval(e, u, direction, orientation, opts).constant;
}

bool locally_constant(const Operator& op, std::size_t i, std::span<const double> u, NodeSet direction,
                      Orientation orientation, const LocalOptions& opts) {
    if (u.size() != op.dim()) throw std::invalid_argument("locally_constant: vector length does not match dimension");
    return locally_constant(op.coord(i), u, direction, orientation, opts);
}

double breakpoint_radius(const Expr& e, std::span<const double> u, const LocalOptions& opts) {
    double value = 0.0;
    return radius_walk(e, u, opts, value);
}

double breakpoint_radius(const Operator& op, std::span<const double> u, const LocalOptions& opts) {
    double r = kInf;
    for (const auto& c : op.coords()) r = std::min(r, breakpoint_radius(c, u, opts));
    return r;
}

NodeSet support(const Operator& op, std::size_t i) {
    if (!op.is_convex()) throw ExprError("support: the limit characterization requires a convex operator");
    NodeSet s;
    for (std::size_t j = 0; j < op.dim(); ++j)
        if (eval_ext(op, i, {NodeSet::single(j), Sign::Plus}).is_pos_inf()) s.insert(j);
    return s;
}

// ---------------------------------------------------------------------------
// Structural transforms

namespace {

std::vector<Expr> map_children(const Node& n, Expr (*f)(const Expr&)) {
    std::vector<Expr> out;
    out.reserve(n.children.size());
    for (const auto& c : n.children) out.push_back(f(c));
    return out;
}

std::vector<std::pair<double, Expr>> uniform_terms(std::vector<Expr> children) {
    std::vector<std::pair<double, Expr>> terms;
    const double w = 1.0 / static_cast<double>(children.size());
    for (auto& c : children) terms.emplace_back(w, std::move(c));
    return terms;
}

Expr rebuild_weighted(NodeKind kind, double r, const std::vector<double>& weights, std::vector<Expr> children) {
    Node n;
    n.kind = kind;
    n.r = r;
    n.weights = weights;
    n.children = std::move(children);
    return make_node(std::move(n));
}

}  // namespace

Expr signature(const Expr& e) {
    const Node& n = e.node();
    switch (n.kind) {
    case NodeKind::Var:
        return e;
    case NodeKind::Shift:
        return signature(n.children[0]);
    case NodeKind::Min:
        return min_of(map_children(n, signature));
    case NodeKind::Max:
        return max_of(map_children(n, signature));
    case NodeKind::Avg:
        return avg(uniform_terms(map_children(n, signature)));
    case NodeKind::Mean:
        if (n.r == 0.0) return avg(uniform_terms(map_children(n, signature)));
        return rebuild_weighted(NodeKind::Mean, n.r > 0.0 ? kInf : -kInf, n.weights, map_children(n, signature));
    case NodeKind::SupMix:
    case NodeKind::InfMix:
        throw ExprError("signature: supmix/infmix lie outside the generalized-means class");
    }
    return e;
}

Operator signature(const Operator& op) {
    std::vector<Expr> coords;
    for (const auto& c : op.coords()) coords.push_back(signature(c));
    return Operator(op.dim(), std::move(coords));
}

Expr recession(const Expr& e) {
    const Node& n = e.node();
    switch (n.kind) {
    case NodeKind::Var:
        return e;
    case NodeKind::Shift:
        return recession(n.children[0]);
    case NodeKind::Min:
        return min_of(map_children(n, recession));
    case NodeKind::Max:
        return max_of(map_children(n, recession));
    case NodeKind::Avg:
        return rebuild_weighted(NodeKind::Avg, 0.0, n.weights, map_children(n, recession));
    case NodeKind::Mean:
        if (n.r == 0.0) return rebuild_weighted(NodeKind::Avg, 0.0, n.weights, map_children(n, recession));
        return n.r > 0.0 ? max_of(map_children(n, recession)) : min_of(map_children(n, recession));
    case NodeKind::SupMix:
        return max_of(map_children(n, recession));
    case NodeKind::InfMix:
        return min_of(map_children(n, recession));
    }
    return e;
}

Operator recession(const Operator& op) {
    std::vector<Expr> coords;
    for (const auto& c : op.coords()) coords.push_back(recession(c));
    return Operator(op.dim(), std::move(coords));
}

Expr relabel(const Expr& e, std::span<const std::size_t> perm) {
    const Node& n = e.node();
    if (n.kind == NodeKind::Var) return var(perm[n.var]);
    Node copy = n;
    for (auto& c : copy.children) c = relabel(c, perm);
    return make_node(std::move(copy));
}

namespace {

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void write_dsl(std::ostream& os, const Expr& e) {
    const Node& n = e.node();
    auto list = [&](const char* name) {
        os << name << '(';
        for (std::size_t k = 0; k < n.children.size(); ++k) {
            if (k) os << ", ";
            write_dsl(os, n.children[k]);
        }
        os << ')';
    };
    auto wlist = [&] {
        for (std::size_t k = 0; k < n.children.size(); ++k) {
            if (k) os << ", ";
            os << num(n.weights[k]) << ':';
            write_dsl(os, n.children[k]);
        }
        os << ')';
    };
    switch (n.kind) {
    case NodeKind::Var:
        os << 'x' << n.var + 1;
        break;
    case NodeKind::Shift:
        os << num(n.constant) << " + ";
        write_dsl(os, n.children[0]);
        break;
    case NodeKind::Min:
        list("min");
        break;
    case NodeKind::Max:
        list("max");
        break;
    case NodeKind::Avg:
        os << "avg(";
        wlist();
        break;
    case NodeKind::Mean:
        os << "mean(" << (n.r == kInf ? "+inf" : n.r == -kInf ? "-inf" : num(n.r)) << "; ";
        wlist();
        break;
    case NodeKind::SupMix:
        list("supmix");
        break;
    case NodeKind::InfMix:
        list("infmix");
        break;
    }
}

}  // namespace

std::string to_dsl(const Expr& e) {
    std::ostringstream os;
    write_dsl(os, e);
    return os.str();
}

std::string to_dsl(const Operator& op) {
    std::ostringstream os;
    os << "operator n=" << op.dim() << '\n';
    for (std::size_t i = 0; i < op.dim(); ++i) os << 'T' << i + 1 << " := " << to_dsl(op.coord(i)) << '\n';
    return os.str();
}

std::string to_string(NodeSet s) {
    std::string out = "{";
    bool first = true;
    for (auto l : s.labels()) {
        if (!first) out += ',';
        out += std::to_string(l);
        first = false;
    }
    return out + "}";
}

}  // namespace pfgame
