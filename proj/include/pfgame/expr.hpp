#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pfgame/node_set.hpp"

namespace pfgame {

/// Raised when an expression or operator violates a structural invariant.
class ExprError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class NodeKind { Var, Shift, Min, Max, Avg, Mean, SupMix, InfMix };

struct Node;

/// Immutable, shared expression tree for one coordinate function of a
/// monotone additively homogeneous map. All inputs are in additive (log)
/// coordinates.
class Expr {
public:
    Expr() = default;

    const Node& node() const { return *node_; }
    const Node* operator->() const { return node_.get(); }
    explicit operator bool() const { return static_cast<bool>(node_); }

    /// Largest variable index + 1 (0 for constant-free leaves never occur).
    std::size_t arity() const;

    friend bool operator==(const Expr& a, const Expr& b);

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    friend Expr make_node(Node n);
    std::shared_ptr<const Node> node_;
};

struct Node {
    NodeKind kind = NodeKind::Var;
    std::size_t var = 0;         // Var
    double constant = 0.0;       // Shift
    double r = 0.0;              // Mean: finite, 0, or +/-infinity
    std::vector<double> weights; // Avg, Mean (positive, summing to 1)
    std::vector<Expr> children;
};

Expr make_node(Node n);

// Builders. They validate weights, prune zero weights and throw ExprError on
// malformed input.
Expr var(std::size_t i);
Expr shift(double c, Expr child);
Expr min_of(std::vector<Expr> children);
Expr max_of(std::vector<Expr> children);
Expr avg(std::vector<std::pair<double, Expr>> terms);
Expr mean(double r, std::vector<std::pair<double, Expr>> terms);
Expr supmix(Expr a, Expr b);
Expr infmix(Expr a, Expr b);

enum class Convexity { Convex, Unknown };

/// Syntactic convexity: Convex iff no Min, InfMix or negative-order mean occurs.
Convexity syntactic_convexity(const Expr& e);

/// A map R^n -> R^n given coordinate-wise.
class Operator {
public:
    Operator(std::size_t n, std::vector<Expr> coords);

    std::size_t dim() const { return coords_.size(); }
    const Expr& coord(std::size_t i) const { return coords_.at(i); }
    const std::vector<Expr>& coords() const { return coords_; }
    Convexity convexity() const { return convexity_; }
    bool is_convex() const { return convexity_ == Convexity::Convex; }

    /// Overrides the syntactic flag; used by front-ends that know more.
    Operator with_convexity(Convexity c) const;

    friend bool operator==(const Operator& a, const Operator& b) { return a.coords_ == b.coords_; }

private:
    std::vector<Expr> coords_;
    Convexity convexity_;
};

/// The function h(z) = sup_{0<p<=1} { log p + p z }.
double mix_h(double z);

double eval(const Expr& e, std::span<const double> x);
std::vector<double> eval(const Operator& op, std::span<const double> x);

/// Extended real used by the limit oracle.
class ExtValue {
public:
    enum class Tag { NegInf, Finite, PosInf };

    static ExtValue finite(double v) { return ExtValue(Tag::Finite, v); }
    static ExtValue pos_inf() { return ExtValue(Tag::PosInf, 0.0); }
    static ExtValue neg_inf() { return ExtValue(Tag::NegInf, 0.0); }

    Tag tag() const { return tag_; }
    bool is_finite() const { return tag_ == Tag::Finite; }
    bool is_pos_inf() const { return tag_ == Tag::PosInf; }
    bool is_neg_inf() const { return tag_ == Tag::NegInf; }
    double value() const;

    friend bool operator==(const ExtValue&, const ExtValue&) = default;

private:
    ExtValue(Tag t, double v) : tag_(t), value_(v) {}
    Tag tag_;
    double value_;
};

std::string to_string(const ExtValue& v);

enum class Sign { Plus, Minus };

/// The limiting direction alpha * e_J with alpha -> sign * infinity.
struct SignPattern {
    NodeSet support;
    Sign sign = Sign::Plus;
};

/// Exact value of lim_{alpha -> sign*inf} T_i(alpha e_J).
ExtValue eval_ext(const Operator& op, std::size_t i, const SignPattern& p);
ExtValue eval_ext(const Expr& e, const SignPattern& p);

/// Same as eval_ext, invoking visit on the value of every node after it is
/// computed (post-order).
ExtValue eval_ext_traced(const Expr& e, const SignPattern& p,
                         const std::function<void(const Node&, const ExtValue&)>& visit);

enum class Orientation { Increase, Decrease };

struct LocalOptions {
    /// Two children values are tied when they differ by at most
    /// tie_tolerance * max(1, |value|).
    double tie_tolerance = 1e-12;
};

/// True iff T_i(u +/- alpha e_J) = T_i(u) for all alpha in [0, eps], some eps > 0.
bool locally_constant(const Operator& op, std::size_t i, std::span<const double> u, NodeSet direction,
                      Orientation orientation, const LocalOptions& opts = {});
bool locally_constant(const Expr& e, std::span<const double> u, NodeSet direction, Orientation orientation,
                      const LocalOptions& opts = {});

/// Radius below which no Min/Max/extremal-mean/mix node of coordinate i changes
/// regime along any direction e_J from u (every node is 1-Lipschitz in sup-norm).
/// Returns +infinity when the expression has no breakpoint.
double breakpoint_radius(const Expr& e, std::span<const double> u, const LocalOptions& opts = {});
double breakpoint_radius(const Operator& op, std::span<const double> u, const LocalOptions& opts = {});

/// supp(T_i) for a convex operator.
NodeSet support(const Operator& op, std::size_t i);

/// Structural normal form for generalized-means expressions: shifts dropped,
/// positive/negative order means collapsed to max/min, geometric means made
/// uniform over their support.
Expr signature(const Expr& e);
Operator signature(const Operator& op);

/// x -> lim k^{-1} T(k x).
Expr recession(const Expr& e);
Operator recession(const Operator& op);

/// Relabels variables: x_j becomes x_{perm[j]}.
Expr relabel(const Expr& e, std::span<const std::size_t> perm);

/// Compact DSL rendering (1-based variables), parseable by parse_expr.
std::string to_dsl(const Expr& e);
std::string to_dsl(const Operator& op);

}  // namespace pfgame
