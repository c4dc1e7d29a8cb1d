#include "fusion/suggest/engine.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fusion/error.hpp"

namespace fusion::suggest {
namespace {

SuggestionEntry make_entry(const ModelView& model, const std::string& state_id,
                           const ComponentInstance& instance) {
  const ScreenState& state = model.state(state_id);
  const ComponentDescriptor* d = model.descriptor(instance.descriptor_id);
  SuggestionEntry e;
  e.target = ModelTarget{instance.descriptor_id, instance.object_index, state_id};
  e.display_type = d->component_type;
  e.display_text = instance.runtime_text.empty() ? d->default_text : instance.runtime_text;
  e.display_location = relative_location(instance.bounds, state.screen_dims);
  e.thumbnail = instance.component_screenshot;
  return e;
}

void number_duplicates(std::vector<SuggestionEntry>& entries) {
  std::map<std::pair<ComponentType, std::string>, int> counts;
  for (const auto& e : entries) ++counts[{e.display_type, e.display_text}];
  std::map<std::pair<ComponentType, std::string>, int> next;
  for (auto& e : entries) {
    const auto key = std::make_pair(e.display_type, e.display_text);
    if (counts[key] >= 2) e.option_number = ++next[key];
  }
}

SuggestionEntry manual_option() {
  SuggestionEntry e;
  e.display_type = ComponentType::kGeneric;
  e.display_text = "Component not listed (enter manually)";
  e.is_manual_option = true;
  return e;
}

}  // namespace

std::string_view to_string(Provenance provenance) {
  return provenance == Provenance::kStateScoped ? "STATE_SCOPED" : "ALL_SCREENS_FALLBACK";
}

std::string SuggestionEntry::disambiguator() const {
  return option_number ? "Option #" + std::to_string(*option_number) : std::string();
}

StateHypothesis initial_hypothesis(const ModelView& model) {
  return StateHypothesis::known({model.graph().root_state});
}

StateHypothesis advance_hypothesis(const StateHypothesis& hypothesis, const ReproStep& step,
                                   const ModelView& model) {
  const auto* target = std::get_if<ModelTarget>(&step.target);
  if (!target) return StateHypothesis::unknown();

  std::vector<std::string> confirmed;
  if (step.confirmed_full_screenshot) {
    confirmed = model.states_with_screenshot(*step.confirmed_full_screenshot);
  }

  std::set<std::string> from;
  if (hypothesis.is_known()) {
    for (const auto& s : hypothesis.states()) {
      const bool kept = confirmed.empty() ||
                        std::find(confirmed.begin(), confirmed.end(), s) != confirmed.end();
      if (kept) from.insert(s);
    }
  } else if (confirmed.size() == 1) {
    from.insert(confirmed.front());
  }

  std::set<std::string> next;
  for (const auto& s : from) {
    if (!model.has_state(s)) continue;
    auto successors = model.transitions_from(s, step.action.kind(), target->ref());
    next.insert(successors.begin(), successors.end());
  }
  if (next.empty()) return StateHypothesis::unknown();
  return StateHypothesis::known(std::move(next));
}

StateHypothesis replay_hypothesis(const std::vector<ReproStep>& steps, const ModelView& model) {
  StateHypothesis h = initial_hypothesis(model);
  for (const auto& step : steps) h = advance_hypothesis(h, step, model);
  return h;
}

SuggestionSet suggest_components(const StateHypothesis& hypothesis, ActionKind action,
                                 const ModelView& model) {
  SuggestionSet set;
  set.action = action;
  if (hypothesis.is_known()) {
    set.provenance = Provenance::kStateScoped;
    std::set<InstanceRef> seen;
    for (const auto& s : hypothesis.states()) {
      if (!model.has_state(s)) continue;
      for (const auto& instance : model.components_for_state(s, action)) {
        if (seen.insert(instance.ref()).second) set.entries.push_back(make_entry(model, s, instance));
      }
    }
  } else {
    set.provenance = Provenance::kAllScreensFallback;
    for (const auto& [state_id, instance] : model.all_components(action)) {
      set.entries.push_back(make_entry(model, state_id, instance));
    }
  }
  number_duplicates(set.entries);
  set.entries.push_back(manual_option());
  return set;
}

std::vector<ShotRef> confirmation_screens(const StateHypothesis& hypothesis, ActionKind action,
                                          const SuggestionEntry& entry, const ModelView& model) {
  if (entry.is_manual_option || !entry.target) return {};
  const ComponentDescriptor* d = model.descriptor(entry.target->descriptor_id);
  if (!d || !d->allows(action)) return {};

  std::vector<std::string> scope;
  if (hypothesis.is_known()) {
    scope.assign(hypothesis.states().begin(), hypothesis.states().end());
  } else {
    for (const auto& s : model.graph().states) scope.push_back(s.state_id);
  }
  std::vector<ShotRef> out;
  std::set<ShotRef> seen;
  for (const auto& s : scope) {
    if (!model.has_state(s)) continue;
    const ScreenState& state = model.state(s);
    if (state.find(entry.target->ref()) && seen.insert(state.full_screenshot).second) {
      out.push_back(state.full_screenshot);
    }
  }
  return out;
}

ReportSession record_step(ReportSession session, const StepInput& input, const ModelView& model) {
  if (session.finalized) {
    throw Error(ErrorCode::kState, "session " + session.session_id + " is already finalized");
  }
  if (input.entered_text && input.action != ActionKind::kType) {
    throw Error(ErrorCode::kValidation, "entered text is only allowed on TYPE steps", "entered_text");
  }
  if (input.direction && input.action != ActionKind::kSwipe) {
    throw Error(ErrorCode::kValidation, "a direction is only allowed on SWIPE steps", "direction");
  }
  if (const auto* target = std::get_if<ModelTarget>(&input.target)) {
    if (!model.has_state(target->state_id)) {
      throw Error(ErrorCode::kValidation, "unknown state '" + target->state_id + "'", "target");
    }
    if (!model.state(target->state_id).find(target->ref())) {
      throw Error(ErrorCode::kValidation,
                  "component " + target->descriptor_id + " (object " + std::to_string(target->object_index) +
                      ") is not on state " + target->state_id,
                  "target");
    }
    if (!model.descriptor(target->descriptor_id)->allows(input.action)) {
      throw Error(ErrorCode::kValidation,
                  std::string("component does not accept ") + std::string(fusion::to_string(input.action)),
                  "action");
    }
  }
  if (input.confirmed_screenshot && model.states_with_screenshot(*input.confirmed_screenshot).empty()) {
    throw Error(ErrorCode::kValidation, "confirmed screenshot is not a known screen", "confirmed_screenshot");
  }

  ReproStep step;
  step.step_index = static_cast<int>(session.steps.size()) + 1;
  switch (input.action) {
    case ActionKind::kType: step.action = Action::type(input.entered_text.value_or("")); break;
    case ActionKind::kSwipe: step.action = Action::swipe(input.direction); break;
    default: step.action = Action::of(input.action);
  }
  step.target = input.target;
  step.note = input.note;
  step.confirmed_full_screenshot = input.confirmed_screenshot;

  session.hypothesis = advance_hypothesis(session.hypothesis, step, model);
  session.steps.push_back(std::move(step));
  return session;
}

}  // namespace fusion::suggest
