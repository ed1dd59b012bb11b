#pragma once

// JSON form of solver reports. Big integers are always decimal strings.

#include <json.hpp>

#include "nagell/bounds.hpp"
#include "nagell/constructor.hpp"
#include "nagell/solver.hpp"

namespace nagell::cli {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

json integers_to_json(const std::vector<Integer>& values);
json to_json(const EquationSpec& spec);
json to_json(const PowerCheck& check);
json to_json(const BoundCertificate& cert);
json to_json(const Solution& s);
json to_json(const SolveReport& report);
json to_json(const ConstructionState& state);

PowerCheck power_check_from_json(const json& j);
BoundCertificate certificate_from_json(const json& j);

/// Replays every certificate in a solve or theorem document and re-derives
/// each one from the echoed equation. Returns the number replayed; throws
/// std::runtime_error naming the first check that does not reproduce.
std::size_t replay_document(const json& doc);

}  // namespace nagell::cli
