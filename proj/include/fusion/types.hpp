#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fusion/action.hpp"
#include "fusion/geometry.hpp"

namespace fusion {

// Lowercase hex SHA-256 of a PNG in the screenshot store.
using ShotRef = std::string;

enum class ComponentType {
  kButton,
  kSpinner,
  kCheckbox,
  kTextField,
  kListItem,
  kMenuItem,
  kImage,
  kGeneric,
};

// Wire names are the upper-case enumerators: BUTTON, TEXT_FIELD, ...
std::string_view to_string(ComponentType type);
std::optional<ComponentType> parse_component_type(std::string_view name);
// Lower-case label for reports and suggestion rows ("button", "text field").
std::string_view display_name(ComponentType type);

struct LayoutOrigin {
  std::string file;       // e.g. "layouts/main.xml"
  std::string node_path;  // e.g. "/screen[1]/button[2]"
  bool operator==(const LayoutOrigin&) const = default;
};

// One statically known GUI component plus its traceability links.
struct ComponentDescriptor {
  std::string descriptor_id;
  ComponentType component_type = ComponentType::kGeneric;
  std::string resource_id;
  std::string default_text;
  ActionSet allowed_actions;
  std::vector<std::string> containing_activities;
  std::vector<std::string> declaring_sources;
  LayoutOrigin layout_origin;
  // Synthesized by the ripper for a runtime component absent from layouts.
  bool dynamic_only = false;

  bool allows(ActionKind kind) const { return allowed_actions.count(kind) != 0; }
  bool operator==(const ComponentDescriptor&) const = default;
};

struct ComponentUniverse {
  std::string app_id;
  std::string app_version;
  std::string main_activity;
  std::vector<ComponentDescriptor> descriptors;  // sorted by descriptor_id
  std::map<std::string, std::vector<std::string>> activity_index;
  // Activity name -> the source unit that implements it (from the manifest).
  std::map<std::string, std::string> activity_sources;

  const ComponentDescriptor* find(std::string_view descriptor_id) const;
  bool operator==(const ComponentUniverse&) const = default;
};

// Identifies one instance of a descriptor on a particular screen.
struct InstanceRef {
  std::string descriptor_id;
  int object_index = 1;
  auto operator<=>(const InstanceRef&) const = default;
};

struct ComponentInstance {
  std::string descriptor_id;
  int object_index = 1;
  Rect bounds;
  std::string runtime_text;
  ShotRef component_screenshot;

  InstanceRef ref() const { return {descriptor_id, object_index}; }
  bool operator==(const ComponentInstance&) const = default;
};

// Sorts by (y, x, descriptor_id, object_index).
std::vector<ComponentInstance> order_instances(std::vector<ComponentInstance> instances);
bool instance_order_less(const ComponentInstance& a, const ComponentInstance& b);

struct ScreenState {
  std::string state_id;
  std::string activity_name;
  std::string window_name;
  std::vector<ComponentInstance> instances;
  ShotRef full_screenshot;
  Size screen_dims;
  std::string signature;

  const ComponentInstance* find(const InstanceRef& ref) const;
  bool operator==(const ScreenState&) const = default;
};

struct Transition {
  std::string from_state;
  ActionKind action = ActionKind::kClick;
  InstanceRef target;
  std::string to_state;
  ShotRef before_screenshot;
  ShotRef after_screenshot;
  bool operator==(const Transition&) const = default;
};

struct EventFlowGraph {
  std::string root_state;
  std::vector<ScreenState> states;        // sorted by state_id
  std::vector<Transition> transitions;    // discovery order
  // Descriptors the ripper had to synthesize for unmatched components.
  std::vector<ComponentDescriptor> dynamic_descriptors;
  bool truncated = false;

  const ScreenState* find_state(std::string_view state_id) const;
  bool operator==(const EventFlowGraph&) const = default;
};

// The reporter's current belief about which screen(s) the app is on.
class StateHypothesis {
 public:
  static StateHypothesis unknown() { return StateHypothesis(); }
  // Throws Error(kValidation) on an empty set.
  static StateHypothesis known(std::set<std::string> states);

  bool is_known() const { return known_; }
  const std::set<std::string>& states() const { return states_; }

  bool operator==(const StateHypothesis&) const = default;

 private:
  StateHypothesis() = default;
  bool known_ = false;
  std::set<std::string> states_;
};

struct ManualComponent {
  ComponentType component_type = ComponentType::kGeneric;
  std::string text;
  RelativeLocation relative_location = RelativeLocation::kCenter;
  bool operator==(const ManualComponent&) const = default;
};

// A component chosen from the suggestion list; state_id names the screen
// the reporter confirmed (or the entry's own screen when unconfirmed).
struct ModelTarget {
  std::string descriptor_id;
  int object_index = 1;
  std::string state_id;

  InstanceRef ref() const { return {descriptor_id, object_index}; }
  bool operator==(const ModelTarget&) const = default;
};

using StepTarget = std::variant<ModelTarget, ManualComponent>;

struct ReproStep {
  int step_index = 1;
  Action action = Action::click();  // TYPE carries the entered text
  StepTarget target;
  std::string note;
  std::optional<ShotRef> confirmed_full_screenshot;

  bool is_manual() const { return std::holds_alternative<ManualComponent>(target); }
  bool operator==(const ReproStep&) const = default;
};

enum class Orientation { kPortrait, kLandscape };
std::string_view to_string(Orientation orientation);
std::optional<Orientation> parse_orientation(std::string_view name);

struct ReportSession {
  std::string session_id;
  std::string app_id;
  std::string app_version;
  std::string reporter_name;
  std::string device_name;
  Orientation orientation = Orientation::kPortrait;
  std::string title;
  std::string description;
  std::vector<ReproStep> steps;
  StateHypothesis hypothesis = StateHypothesis::unknown();
  bool finalized = false;
  std::optional<std::uint64_t> report_id;
  std::string created_at;
  std::string updated_at;

  bool operator==(const ReportSession&) const = default;
};

// Developer-facing view of one step.
struct ReportRow {
  int step_index = 1;
  ActionKind action = ActionKind::kClick;
  std::string entered_text;
  ComponentType component_type = ComponentType::kGeneric;
  std::string component_text;
  RelativeLocation relative_location = RelativeLocation::kCenter;
  std::string source_unit;
  std::optional<ShotRef> component_screenshot;
  std::string note;
  bool manual = false;
  bool operator==(const ReportRow&) const = default;
};

struct BugReport {
  std::uint64_t report_id = 0;
  std::string app_id;
  std::string app_version;
  std::string reporter_name;
  std::string device_name;
  Orientation orientation = Orientation::kPortrait;
  std::string title;
  std::string description;
  std::vector<ReproStep> steps;
  std::vector<ReportRow> rows;
  std::vector<ShotRef> screenshots;

  bool operator==(const BugReport&) const = default;
};

}  // namespace fusion
