#include "fusion/dynamic/matcher.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace fusion::dynamic {
namespace {

bool hosted_in(const ComponentDescriptor& d, const std::string& activity) {
  return std::find(d.containing_activities.begin(), d.containing_activities.end(), activity) !=
         d.containing_activities.end();
}

std::string synthesized_id(const RawComponent& raw, const std::string& activity) {
  std::string id = "dynamic:" + activity + "/" + std::string(to_string(raw.type)) + "/";
  if (!raw.resource_id.empty()) return id + "@" + raw.resource_id;
  return id + (raw.editable ? std::string() : raw.text);
}

}  // namespace

const ComponentDescriptor* WorkingUniverse::find(std::string_view descriptor_id) const {
  if (const auto* d = universe_.find(descriptor_id)) return d;
  auto it = std::lower_bound(
      dynamic_.begin(), dynamic_.end(), descriptor_id,
      [](const ComponentDescriptor& d, std::string_view id) { return d.descriptor_id < id; });
  if (it != dynamic_.end() && it->descriptor_id == descriptor_id) return &*it;
  return nullptr;
}

WorkingUniverse::Match WorkingUniverse::match(const RawComponent& raw, const std::string& activity) {
  const auto& descriptors = universe_.descriptors;
  if (!raw.resource_id.empty()) {
    const ComponentDescriptor* first = nullptr;
    for (const auto& d : descriptors) {
      if (d.resource_id != raw.resource_id) continue;
      if (hosted_in(d, activity)) return {d.descriptor_id, false};
      if (!first) first = &d;
    }
    if (first) return {first->descriptor_id, false};
  } else {
    for (const auto& d : descriptors) {
      if (d.component_type == raw.type && hosted_in(d, activity) &&
          (raw.editable || d.default_text == raw.text)) {
        return {d.descriptor_id, false};
      }
    }
  }

  const std::string id = synthesized_id(raw, activity);
  auto it = std::lower_bound(
      dynamic_.begin(), dynamic_.end(), id,
      [](const ComponentDescriptor& d, const std::string& key) { return d.descriptor_id < key; });
  if (it == dynamic_.end() || it->descriptor_id != id) {
    ComponentDescriptor d;
    d.descriptor_id = id;
    d.component_type = raw.type;
    d.resource_id = raw.resource_id;
    d.default_text = raw.editable ? std::string() : raw.text;
    if (raw.clickable) d.allowed_actions.insert(ActionKind::kClick);
    if (raw.long_clickable) d.allowed_actions.insert(ActionKind::kLongClick);
    if (raw.editable && raw.type == ComponentType::kTextField) d.allowed_actions.insert(ActionKind::kType);
    if (raw.swipeable) d.allowed_actions.insert(ActionKind::kSwipe);
    d.containing_activities = {activity};
    d.dynamic_only = true;
    dynamic_.insert(it, std::move(d));
  }
  return {id, true};
}

std::vector<LocalizedInstance> localize(const Observation& observation, WorkingUniverse& universe) {
  std::vector<LocalizedInstance> out;
  out.reserve(observation.components.size());
  for (std::size_t i = 0; i < observation.components.size(); ++i) {
    const RawComponent& raw = observation.components[i];
    LocalizedInstance li;
    li.instance.descriptor_id = universe.match(raw, observation.activity_name).descriptor_id;
    li.instance.bounds = raw.bounds;
    li.instance.runtime_text = raw.text;
    li.raw_index = i;
    out.push_back(std::move(li));
  }
  std::sort(out.begin(), out.end(), [](const LocalizedInstance& a, const LocalizedInstance& b) {
    return std::tie(a.instance.bounds.y, a.instance.bounds.x, a.instance.descriptor_id, a.raw_index) <
           std::tie(b.instance.bounds.y, b.instance.bounds.x, b.instance.descriptor_id, b.raw_index);
  });
  std::map<std::string, int> counters;
  for (auto& li : out) {
    li.instance.object_index = ++counters[li.instance.descriptor_id];
    const ComponentDescriptor* d = universe.find(li.instance.descriptor_id);
    li.clickable = observation.components[li.raw_index].clickable && d->allows(ActionKind::kClick);
  }
  return out;
}

std::string signature_of(const std::string& activity, const std::string& window,
                         const std::vector<LocalizedInstance>& instances) {
  std::map<std::string, int> ceiling;
  for (const auto& li : instances) {
    int& k = ceiling[li.instance.descriptor_id];
    k = std::max(k, li.instance.object_index);
  }
  std::string sig = activity + "\n" + window;
  for (const auto& [id, k] : ceiling) sig += "\n" + id + "*" + std::to_string(k);
  return sig;
}

std::string state_signature(const Observation& observation, WorkingUniverse& universe) {
  return signature_of(observation.activity_name, observation.window_name,
                      localize(observation, universe));
}

}  // namespace fusion::dynamic
