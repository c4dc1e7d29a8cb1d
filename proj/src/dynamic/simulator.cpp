#include "fusion/dynamic/simulator.hpp"

#include "fusion/error.hpp"

namespace fusion::dynamic {
namespace {

constexpr Rgb kOutline{24, 24, 24};
constexpr Rgb kInk{255, 255, 255};

}  // namespace

Raster render_screen(const BehaviorModel& model, const ScreenDecl& screen) {
  Raster raster(model.screen_dims.width, model.screen_dims.height,
                color_for("screen:" + screen.activity + "/" + screen.window));
  for (const auto& c : screen.components) {
    raster.fill_rect(c.bounds, color_for(std::string(to_string(c.type)) + ":" + c.text));
    raster.stroke_rect(c.bounds, kOutline);
    raster.draw_text(c.bounds.x + 2, c.bounds.y + 2, c.text, kInk, c.bounds.width - 4);
  }
  return raster;
}

ScriptedAppDriver::ScriptedAppDriver(BehaviorModel model, SimulatorOptions options)
    : model_(std::move(model)), options_(options), stack_{model_.initial} {}

Observation ScriptedAppDriver::launch_cold() {
  stack_.assign(1, model_.initial);
  return observe();
}

Observation ScriptedAppDriver::observe() {
  const ScreenDecl& screen = model_.screen(stack_.back());
  Observation obs;
  obs.activity_name = screen.activity;
  obs.window_name = screen.window;
  obs.screen_dims = model_.screen_dims;
  for (const auto& c : screen.components) {
    obs.components.push_back(RawComponent{c.id, c.type, c.text, c.bounds, c.clickable,
                                          c.long_clickable, c.editable, c.swipeable});
  }
  return obs;
}

PerformStatus ScriptedAppDriver::perform(const Action& action, std::size_t component_index,
                                         std::chrono::milliseconds) {
  const ScreenDecl& screen = model_.screen(stack_.back());
  if (component_index >= screen.components.size()) return PerformStatus::kRejected;
  ++perform_count_;
  if (action.kind() != ActionKind::kClick) return PerformStatus::kOk;
  if (!screen.components[component_index].clickable) return PerformStatus::kOk;
  auto target = model_.edge_target(stack_.back(), component_index);
  if (target && *target != stack_.back()) stack_.push_back(*target);
  return PerformStatus::kOk;
}

Raster ScriptedAppDriver::capture_screenshot() {
  return render_screen(model_, model_.screen(stack_.back()));
}

bool ScriptedAppDriver::can_go_back() const { return options_.supports_back; }

void ScriptedAppDriver::go_back() {
  if (!options_.supports_back) throw Error(ErrorCode::kState, "driver has no back navigation");
  if (stack_.size() > 1) stack_.pop_back();
}

std::unique_ptr<ScriptedAppDriver> simulate(const analysis::AppPackage& package,
                                            SimulatorOptions options) {
  if (!package.behavior_json) {
    throw Error(ErrorCode::kValidation,
                "package " + package.manifest.app_id + " has no behavior.json");
  }
  return std::make_unique<ScriptedAppDriver>(parse_behavior(*package.behavior_json), options);
}

}  // namespace fusion::dynamic
