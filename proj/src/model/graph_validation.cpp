#include "fusion/graph_validation.hpp"

#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "fusion/error.hpp"

namespace fusion {
namespace {

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorCode::kValidation, "invalid event-flow graph: " + message);
}

void validate_state(const ScreenState& state, const DescriptorLookup& lookup) {
  if (state.activity_name.empty()) fail("state " + state.state_id + " has no activity");
  std::map<std::string, std::set<int>> indices;
  for (const auto& instance : state.instances) {
    if (!lookup(instance.descriptor_id)) {
      fail("state " + state.state_id + " references unknown descriptor " +
           instance.descriptor_id);
    }
    if (!instance.bounds.within(state.screen_dims)) {
      fail("instance " + instance.descriptor_id + " lies outside state " + state.state_id);
    }
    if (!indices[instance.descriptor_id].insert(instance.object_index).second) {
      fail("duplicate object index on state " + state.state_id);
    }
  }
  for (const auto& [id, set] : indices) {
    // dense 1..k
    if (*set.begin() != 1 || *set.rbegin() != static_cast<int>(set.size())) {
      fail("object indices for " + id + " on state " + state.state_id + " are not 1..k");
    }
  }
}

}  // namespace

DescriptorLookup make_lookup(const ComponentUniverse& universe,
                             const EventFlowGraph& graph) {
  return [&universe, &graph](std::string_view id) -> const ComponentDescriptor* {
    if (const auto* d = universe.find(id)) return d;
    for (const auto& d : graph.dynamic_descriptors) {
      if (d.descriptor_id == id) return &d;
    }
    return nullptr;
  };
}

void validate_graph(const EventFlowGraph& graph, const DescriptorLookup& lookup) {
  std::map<std::string, const ScreenState*> by_id;
  for (const auto& state : graph.states) {
    if (!by_id.emplace(state.state_id, &state).second) {
      fail("duplicate state id " + state.state_id);
    }
    validate_state(state, lookup);
  }
  if (!by_id.count(graph.root_state)) fail("root state " + graph.root_state + " missing");

  std::set<std::tuple<std::string, ActionKind, InstanceRef>> triples;
  std::map<std::string, std::vector<std::string>> successors;
  for (const auto& t : graph.transitions) {
    auto from = by_id.find(t.from_state);
    if (from == by_id.end()) fail("transition from unknown state " + t.from_state);
    if (!by_id.count(t.to_state)) fail("transition to unknown state " + t.to_state);
    if (!from->second->find(t.target)) {
      fail("transition target " + t.target.descriptor_id + "#" +
           std::to_string(t.target.object_index) + " not on state " + t.from_state);
    }
    const ComponentDescriptor* d = lookup(t.target.descriptor_id);
    if (!d->allows(t.action)) {
      fail("action " + std::string(to_string(t.action)) + " not allowed on " +
           t.target.descriptor_id);
    }
    if (!triples.emplace(t.from_state, t.action, t.target).second) {
      fail("duplicate transition from " + t.from_state + " on " + t.target.descriptor_id);
    }
    successors[t.from_state].push_back(t.to_state);
  }

  std::set<std::string> seen{graph.root_state};
  std::deque<std::string> queue{graph.root_state};
  while (!queue.empty()) {
    const std::string current = queue.front();
    queue.pop_front();
    for (const auto& next : successors[current]) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  if (seen.size() != by_id.size()) fail("some states are unreachable from the root");
}

}  // namespace fusion
