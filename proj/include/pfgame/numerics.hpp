#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pfgame/expr.hpp"
#include "pfgame/tensor.hpp"

namespace pfgame {

struct SolveConfig {
    double tolerance = 1e-10;      // on the Hilbert seminorm of successive iterates
    std::size_t max_iters = 100000;
    double damping = 0.5;          // theta in y = (1 - theta) x + theta T(x)

    void validate() const;
};

/// Residual threshold an ergodic solution must meet to count as converged.
inline constexpr double kErgodicResidualTolerance = 1e-8;

/// (lambda, u) with T(u) = lambda e + u up to `residual` in sup-norm.
struct EigWitness {
    std::vector<double> u;
    double lambda = 0.0;
    double residual = 0.0;
    std::size_t iterations = 0;
};

enum class SolveStatus { Converged, NonConvergence };

struct SolveResult {
    SolveStatus status = SolveStatus::NonConvergence;
    EigWitness witness;  // last iterate when not converged

    bool converged() const { return status == SolveStatus::Converged; }
};

double hilbert_seminorm(std::span<const double> x);

/// sup-norm of T(u) - lambda e - u.
double ergodic_residual(const Operator& op, std::span<const double> u, double lambda);

/// lambda minimizing the residual at u: midpoint of the range of T(u) - u.
double best_eigenvalue(const Operator& op, std::span<const double> u);

/// Damped relative value iteration. The last coordinate is pinned to x0's.
SolveResult solve_ergodic(const Operator& op, std::span<const double> x0, const SolveConfig& cfg = {});

/// T^k(0) / k.
std::vector<double> mean_payoff(const Operator& op, std::size_t k);

/// alpha e + x <= T(x) <= beta e + x, componentwise up to tol * max(1, |T_i(x)|).
bool slice_membership(const Operator& op, std::span<const double> x, double alpha, double beta, double tol = 1e-12);

/// g + T; coordinates with g_i = 0 are left untouched.
Operator perturb_diagonal(const Operator& op, std::span<const double> g);

/// Positive eigenpair of F u^(d-1) = lambda u^(d-1), normalized so max u = 1.
struct TensorEigenpair {
    double lambda = 0.0;
    std::vector<double> u;
    double residual = 0.0;  // sup-norm of F u^(d-1) - lambda u^(d-1), relative to ||u^(d-1)||
    std::size_t iterations = 0;
};

struct TensorSolveResult {
    SolveStatus status = SolveStatus::NonConvergence;
    TensorEigenpair pair;

    bool converged() const { return status == SolveStatus::Converged; }
};

TensorSolveResult tensor_eigenpair(const Tensor& t, const SolveConfig& cfg = {});

}  // namespace pfgame
