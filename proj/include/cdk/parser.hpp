#pragma once

#include <optional>
#include <string>

#include "cdk/event_model.hpp"
#include "cdk/formula.hpp"

namespace cdk {

// When no universe is declared the parser infers agents from group
// positions; a token then used both as agent and proposition is rejected.
struct ParseContext {
  std::optional<Group> universe;
  const EventRegistry* registry = nullptr;
};

Formula parse_formula(const std::string& text, const ParseContext& ctx = {});

// Parses an action string: "!<readmap>" or "<model>.<event>".
// Returns either a reading map or an event reference.
struct ParsedAction {
  std::optional<ReadingMap> reading;
  std::string event_model, event_id;
};
ParsedAction parse_action(const std::string& text, const ParseContext& ctx = {});

}  // namespace cdk
