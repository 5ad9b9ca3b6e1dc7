#pragma once

#include <string>

#include <json.hpp>

#include "pfgame/decide.hpp"
#include "pfgame/numerics.hpp"

namespace pfgame {

inline constexpr const char* kReportSchema = "pfgame/1";

std::string to_string(Verdict v);
std::string to_string(DecisionPath p);
std::string game_label(const GameKind& g);

/// Fields use 1-based node labels.
nlohmann::json to_json(const DecisionReport& r);
nlohmann::json to_json(const SolveResult& r);
nlohmann::json to_json(const TensorSolveResult& r);
nlohmann::json to_json(const DominionCertificate& c);
nlohmann::json to_json(const SecondEigenvectorResult& r);

}  // namespace pfgame
