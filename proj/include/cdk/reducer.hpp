#pragma once

#include "cdk/event_model.hpp"
#include "cdk/formula.hpp"

namespace cdk {

struct ReduceStats {
  std::size_t steps = 0;  // law applications
};

// Compiles dynamic modalities away, innermost first, so every law fires on
// an already-static body. The output is semantically equivalent on every
// model and mentions no [!α] or [E.e].
//
// Boolean and epistemic structure of static subformulas is left as
// written; laws rewrite sugar operators directly (the K/D laws are the
// singleton instances of the Cd law).
Formula reduce(const Formula& f, const EventRegistry& registry = {},
               ReduceStats* stats = nullptr);

// Same, but rejects formulas containing event modalities.
Formula reduce_semipublic(const Formula& f, ReduceStats* stats = nullptr);

// Same, but rejects formulas containing semi-public modalities. Common
// (distributed) knowledge under an event modality has no reduction law and
// raises a fragment error.
Formula reduce_event(const Formula& f, const EventRegistry& registry,
                     ReduceStats* stats = nullptr);

}  // namespace cdk
