#include "fusion/types.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "fusion/error.hpp"

namespace fusion {
namespace {

struct TypeNames {
  ComponentType type;
  std::string_view wire;
  std::string_view display;
};

constexpr std::array<TypeNames, 8> kTypeNames = {{
    {ComponentType::kButton, "BUTTON", "button"},
    {ComponentType::kSpinner, "SPINNER", "spinner"},
    {ComponentType::kCheckbox, "CHECKBOX", "checkbox"},
    {ComponentType::kTextField, "TEXT_FIELD", "text field"},
    {ComponentType::kListItem, "LIST_ITEM", "list item"},
    {ComponentType::kMenuItem, "MENU_ITEM", "menu item"},
    {ComponentType::kImage, "IMAGE", "image"},
    {ComponentType::kGeneric, "GENERIC", "component"},
}};

}  // namespace

std::string_view to_string(ComponentType type) {
  return kTypeNames[static_cast<int>(type)].wire;
}

std::string_view display_name(ComponentType type) {
  return kTypeNames[static_cast<int>(type)].display;
}

std::optional<ComponentType> parse_component_type(std::string_view name) {
  for (const auto& entry : kTypeNames) {
    if (entry.wire == name) return entry.type;
  }
  return std::nullopt;
}

std::string_view to_string(Orientation orientation) {
  return orientation == Orientation::kLandscape ? "LANDSCAPE" : "PORTRAIT";
}

std::optional<Orientation> parse_orientation(std::string_view name) {
  if (name == "PORTRAIT") return Orientation::kPortrait;
  if (name == "LANDSCAPE") return Orientation::kLandscape;
  return std::nullopt;
}

const ComponentDescriptor* ComponentUniverse::find(std::string_view descriptor_id) const {
  auto it = std::lower_bound(
      descriptors.begin(), descriptors.end(), descriptor_id,
      [](const ComponentDescriptor& d, std::string_view id) { return d.descriptor_id < id; });
  if (it != descriptors.end() && it->descriptor_id == descriptor_id) return &*it;
  return nullptr;
}

bool instance_order_less(const ComponentInstance& a, const ComponentInstance& b) {
  return std::tie(a.bounds.y, a.bounds.x, a.descriptor_id, a.object_index) <
         std::tie(b.bounds.y, b.bounds.x, b.descriptor_id, b.object_index);
}

std::vector<ComponentInstance> order_instances(std::vector<ComponentInstance> instances) {
  std::stable_sort(instances.begin(), instances.end(), instance_order_less);
  return instances;
}

const ComponentInstance* ScreenState::find(const InstanceRef& ref) const {
  for (const auto& instance : instances) {
    if (instance.descriptor_id == ref.descriptor_id &&
        instance.object_index == ref.object_index) {
      return &instance;
    }
  }
  return nullptr;
}

const ScreenState* EventFlowGraph::find_state(std::string_view state_id) const {
  auto it = std::lower_bound(
      states.begin(), states.end(), state_id,
      [](const ScreenState& s, std::string_view id) { return s.state_id < id; });
  if (it != states.end() && it->state_id == state_id) return &*it;
  return nullptr;
}

StateHypothesis StateHypothesis::known(std::set<std::string> states) {
  if (states.empty()) {
    throw Error(ErrorCode::kValidation, "a known hypothesis needs at least one state");
  }
  StateHypothesis h;
  h.known_ = true;
  h.states_ = std::move(states);
  return h;
}

}  // namespace fusion
