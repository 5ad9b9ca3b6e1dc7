#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pfgame/games.hpp"

namespace pfgame {

enum class Verdict { NoDisjointDominions, DisjointDominions };
enum class DecisionPath { General, ConvexFast, BruteForce };

struct DecisionReport {
    Verdict verdict = Verdict::NoDisjointDominions;
    NodeSet min_dominion;  // I, empty unless DisjointDominions
    NodeSet max_dominion;  // J, empty unless DisjointDominions
    GameKind game = GameKind::at_infinity();
    std::uint64_t oracle_calls = 0;
    /// Largest number of oracle calls issued by a single reach computation.
    std::uint64_t max_reach_calls = 0;
    DecisionPath path = DecisionPath::General;
    std::size_t dim = 0;

    bool disjoint() const { return verdict == Verdict::DisjointDominions; }
};

struct DecideOptions {
    enum class Path { Auto, General, ConvexFast };
    Path path = Path::Auto;
    /// Workers for the subset enumeration of the general path.
    unsigned threads = 1;
    /// Tie tolerance for the local game; by default derived from the residual
    /// of the eigenvector (at least 1e-12).
    std::optional<double> tie_tolerance;
};

/// Decides whether the players have disjoint dominions in the given game.
/// General path: every I whose complement is H+-invariant, in (popcount,
/// lexicographic) order, is tested against reach(I, H-). Convex fast path:
/// final classes of the digraph plus one H- reach.
DecisionReport decide(const Operator& op, const GameKind& game, const DecideOptions& opts = {});

/// Game at infinity: NoDisjointDominions iff all slice spaces are bounded.
DecisionReport decide_existence(const Operator& op, const DecideOptions& opts = {});

/// Local game at an eigenvector u: NoDisjointDominions iff u is the unique
/// eigenvector up to an additive constant. Throws std::invalid_argument when u
/// is not an eigenvector within 1e-8.
DecisionReport decide_uniqueness(const Operator& op, std::span<const double> u, const DecideOptions& opts = {});

/// Local game used by decide_uniqueness at u (tie tolerance resolved).
GameKind uniqueness_game(const Operator& op, std::span<const double> u, std::optional<double> tie_tolerance = {});

/// Reference decision by exhaustive pair enumeration. Requires n <= 5.
DecisionReport brute_force_decide(const Operator& op, const GameKind& game);
DecisionReport brute_force_existence(const Operator& op);

/// Sandwich certificate for disjoint dominions of the game at infinity:
/// k (s e_J + alpha e) <= S^k(0) <= k (s e_{not I} + beta e) for S = s e_J + T.
struct DominionCertificate {
    double alpha = 0.0;
    double beta = 0.0;
    double s = 0.0;
    std::size_t steps = 0;
    bool verified = false;
    /// min over J minus max over I of S^steps(0) / steps.
    double separation = 0.0;
};

DominionCertificate certify_disjoint_dominions(const Operator& op, const DecisionReport& report,
                                               std::size_t steps = 50);

struct SecondEigenvectorResult {
    std::vector<double> v;
    double lambda = 0.0;
    double epsilon = 0.0;
    double residual = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
};

/// Builds an eigenvector v with v - u nonconstant from disjoint dominions
/// (I, J) of the local game at u: v - u is 0 on I, epsilon on J, and a fixed
/// point of the restricted map on the remaining coordinates.
SecondEigenvectorResult second_eigenvector(const Operator& op, std::span<const double> u, NodeSet min_dominion,
                                           NodeSet max_dominion, std::optional<double> tie_tolerance = {});

}  // namespace pfgame
