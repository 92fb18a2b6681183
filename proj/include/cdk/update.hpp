#pragma once

#include "cdk/event_model.hpp"
#include "cdk/model.hpp"
#include "cdk/reading.hpp"

namespace cdk {

// S^{!α}: same states and valuation, every agent's relation becomes the
// distributed-knowledge relation of its read set.
ModelPtr semi_public_update(const EpistemicModel& m, const ReadingMap& alpha);

// S⊗E: states are all pairs "s@e"; (s,e) ~a (s',e') iff s ~_{e(a)} s' and
// e ~a e'. Reading events have no preconditions, so S×E is exact.
ModelPtr product_update(const EpistemicModel& m, const ReadingEventModel& em);

// Name of the product state for (s, e).
std::string product_state_name(const std::string& state, const std::string& event);

}  // namespace cdk
