#include "pfgame/report.hpp"

namespace pfgame {

std::string to_string(Verdict v) {
    return v == Verdict::DisjointDominions ? "DisjointDominions" : "NoDisjointDominions";
}

std::string to_string(DecisionPath p) {
    switch (p) {
        case DecisionPath::General: return "General";
        case DecisionPath::ConvexFast: return "ConvexFast";
        case DecisionPath::BruteForce: return "BruteForce";
    }
    return "General";
}

std::string game_label(const GameKind& g) { return g.is_local() ? "Local" : "AtInfinity"; }

nlohmann::json to_json(const DecisionReport& r) {
    nlohmann::json j{{"schema", kReportSchema},
                     {"verdict", to_string(r.verdict)},
                     {"I", r.min_dominion.labels()},
                     {"J", r.max_dominion.labels()},
                     {"game", game_label(r.game)},
                     {"oracle_calls", r.oracle_calls},
                     {"path", to_string(r.path)}};
    if (r.game.is_local()) {
        j["u"] = r.game.point();
        j["tie_tolerance"] = r.game.local_options().tie_tolerance;
    }
    return j;
}

nlohmann::json to_json(const SolveResult& r) {
    return {{"status", r.converged() ? "Converged" : "NonConvergence"},
            {"lambda", r.witness.lambda},
            {"u", r.witness.u},
            {"residual", r.witness.residual},
            {"iterations", r.witness.iterations}};
}

nlohmann::json to_json(const TensorSolveResult& r) {
    return {{"status", r.converged() ? "Converged" : "NonConvergence"},
            {"lambda", r.pair.lambda},
            {"u", r.pair.u},
            {"residual", r.pair.residual},
            {"iterations", r.pair.iterations}};
}

nlohmann::json to_json(const DominionCertificate& c) {
    return {{"alpha", c.alpha}, {"beta", c.beta},         {"s", c.s},
            {"steps", c.steps}, {"verified", c.verified}, {"separation", c.separation}};
}

nlohmann::json to_json(const SecondEigenvectorResult& r) {
    return {{"v", r.v},
            {"lambda", r.lambda},
            {"epsilon", r.epsilon},
            {"residual", r.residual},
            {"iterations", r.iterations},
            {"converged", r.converged}};
}

}  // namespace pfgame
