#include "fusion/store/model_view.hpp"

#include <algorithm>

#include "fusion/error.hpp"
#include "fusion/graph_validation.hpp"

namespace fusion {

ModelView::ModelView(ComponentUniverse universe, EventFlowGraph graph)
    : universe_(std::move(universe)), graph_(std::move(graph)) {
  std::sort(graph_.states.begin(), graph_.states.end(),
            [](const auto& a, const auto& b) { return a.state_id < b.state_id; });
  for (auto& state : graph_.states) state.instances = order_instances(std::move(state.instances));
  validate_graph(graph_, make_lookup(universe_, graph_));
  for (const auto& t : graph_.transitions) {
    transitions_[{t.from_state, t.action, t.target}].insert(t.to_state);
  }
}

const ComponentDescriptor* ModelView::descriptor(std::string_view descriptor_id) const {
  if (const auto* d = universe_.find(descriptor_id)) return d;
  for (const auto& d : graph_.dynamic_descriptors) {
    if (d.descriptor_id == descriptor_id) return &d;
  }
  return nullptr;
}

const ScreenState& ModelView::state(std::string_view state_id) const {
  if (const auto* s = graph_.find_state(state_id)) return *s;
  throw Error(ErrorCode::kNotFound, "unknown state '" + std::string(state_id) + "'");
}

bool ModelView::has_state(std::string_view state_id) const {
  return graph_.find_state(state_id) != nullptr;
}

std::vector<ComponentInstance> ModelView::components_for_state(std::string_view state_id,
                                                               ActionKind action) const {
  std::vector<ComponentInstance> out;
  for (const auto& instance : state(state_id).instances) {
    const ComponentDescriptor* d = descriptor(instance.descriptor_id);
    if (d && d->allows(action)) out.push_back(instance);
  }
  return out;
}

std::vector<std::pair<std::string, ComponentInstance>> ModelView::all_components(ActionKind action) const {
  std::vector<std::pair<std::string, ComponentInstance>> out;
  for (const auto& s : graph_.states) {
    for (auto& instance : components_for_state(s.state_id, action)) {
      out.emplace_back(s.state_id, std::move(instance));
    }
  }
  return out;
}

std::set<std::string> ModelView::transitions_from(std::string_view state_id, ActionKind action,
                                                  const InstanceRef& target) const {
  state(state_id);  // throws on unknown states
  auto it = transitions_.find({std::string(state_id), action, target});
  if (it == transitions_.end()) return {};
  return it->second;
}

std::vector<std::string> ModelView::states_with_screenshot(std::string_view hash) const {
  std::vector<std::string> out;
  for (const auto& s : graph_.states) {
    if (s.full_screenshot == hash) out.push_back(s.state_id);
  }
  return out;
}

std::string ModelView::source_unit_for(std::string_view state_id, std::string_view descriptor_id) const {
  if (const auto* s = graph_.find_state(state_id)) {
    auto it = universe_.activity_sources.find(s->activity_name);
    if (it != universe_.activity_sources.end() && !it->second.empty()) return it->second;
  }
  if (const auto* d = descriptor(descriptor_id); d && !d->declaring_sources.empty()) {
    return d->declaring_sources.front();
  }
  return {};
}

}  // namespace fusion
