#pragma once

#include <map>
#include <string>

#include "cdk/bits.hpp"
#include "cdk/event_model.hpp"
#include "cdk/formula.hpp"
#include "cdk/model.hpp"
#include "cdk/pseudo.hpp"

namespace cdk {

// Evaluates formulas on epistemic models. Dynamic modalities are handled
// by constructing the updated model; updates are cached per (model,
// action), so nested dynamics do not recompute. A Checker instance is not
// meant to be shared across threads; create one per evaluation thread.
class Checker {
 public:
  Checker() = default;
  explicit Checker(EventRegistry registry) : registry_(std::move(registry)) {}

  const EventRegistry& registry() const { return registry_; }

  // Recursive top-down evaluation at one state.
  bool check(const ModelPtr& m, const std::string& state, const Formula& f);
  bool check_at(const ModelPtr& m, std::size_t state, const Formula& f);

  // Bottom-up evaluation of the whole extension; agrees with check().
  Bits extension(const ModelPtr& m, const Formula& f);

  bool valid_on(const ModelPtr& m, const Formula& f);

  // The updated model for an action, shared with callers (used by the CLI).
  ModelPtr apply_semipub(const ModelPtr& m, const ReadingMap& alpha);
  ModelPtr apply_event(const ModelPtr& m, const std::string& model_id);

 private:
  bool check_rec(const ModelPtr& m, std::size_t state, const Formula& f);
  Bits extension_rec(const ModelPtr& m, const Formula& f);

  EventRegistry registry_;
  std::map<std::pair<uint64_t, std::string>, ModelPtr> update_cache_;
  std::map<std::pair<uint64_t, std::size_t>, Bits> extension_cache_;
};

// Static-fragment evaluation on a pseudo-model: comparatives are read from
// the valuation, Cd is the Kripke box over the stored group relations.
bool check_pseudo(const PseudoModel& pm, std::size_t state, const Formula& f);
Bits extension_pseudo(const PseudoModel& pm, const Formula& f);

}  // namespace cdk
