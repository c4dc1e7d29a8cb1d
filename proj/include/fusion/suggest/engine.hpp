#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/store/model_view.hpp"
#include "fusion/types.hpp"

namespace fusion::suggest {

enum class Provenance { kStateScoped, kAllScreensFallback };

std::string_view to_string(Provenance provenance);

struct SuggestionEntry {
  std::optional<ModelTarget> target;  // absent on the manual option
  ComponentType display_type = ComponentType::kGeneric;
  std::string display_text;
  RelativeLocation display_location = RelativeLocation::kCenter;
  ShotRef thumbnail;
  std::optional<int> option_number;  // set iff the (type, text) pair repeats
  bool is_manual_option = false;

  // "Option #k", or empty.
  std::string disambiguator() const;
  bool operator==(const SuggestionEntry&) const = default;
};

struct SuggestionSet {
  ActionKind action = ActionKind::kClick;
  Provenance provenance = Provenance::kStateScoped;
  std::vector<SuggestionEntry> entries;  // the manual option is always last
  bool operator==(const SuggestionSet&) const = default;
};

// Cold start: KNOWN({root}).
StateHypothesis initial_hypothesis(const ModelView& model);

// One step of state tracking. The confirmed screenshot names the screen the
// step was performed on: it narrows a KNOWN set, or re-anchors an UNKNOWN
// one when it identifies exactly one state. The result is the set of
// recorded successors for (state, action, target); empty successors and
// manual steps give UNKNOWN.
StateHypothesis advance_hypothesis(const StateHypothesis& hypothesis, const ReproStep& step,
                                   const ModelView& model);

// Recomputes the hypothesis from the cold start over the full step list.
StateHypothesis replay_hypothesis(const std::vector<ReproStep>& steps, const ModelView& model);

// KNOWN: components on the candidate states that allow `action`, one entry
// per instance. UNKNOWN: every state's components (all_components).
SuggestionSet suggest_components(const StateHypothesis& hypothesis, ActionKind action,
                                 const ModelView& model);

// Full screenshots of the in-scope states holding the entry's instance,
// deduplicated by hash, in state order. Empty for the manual option.
std::vector<ShotRef> confirmation_screens(const StateHypothesis& hypothesis, ActionKind action,
                                          const SuggestionEntry& entry, const ModelView& model);

struct StepInput {
  ActionKind action = ActionKind::kClick;
  StepTarget target;
  std::optional<std::string> entered_text;  // TYPE only
  std::optional<SwipeDirection> direction;  // SWIPE only
  std::string note;
  std::optional<ShotRef> confirmed_screenshot;
};

// Appends the step with the next index and advances the hypothesis.
// Throws Error(kState) on a finalized session and Error(kValidation) (with
// the offending field) on bad input.
ReportSession record_step(ReportSession session, const StepInput& input, const ModelView& model);

}  // namespace fusion::suggest
