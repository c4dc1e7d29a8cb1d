#pragma once

#include <memory>
#include <vector>

#include "fusion/analysis/package.hpp"
#include "fusion/dynamic/behavior.hpp"
#include "fusion/dynamic/driver.hpp"

namespace fusion::dynamic {

struct SimulatorOptions {
  // Without back support the ripper falls back to cold restart and replay.
  bool supports_back = true;
};

// Deterministic driver that plays a BehaviorModel. Clicking a component
// with no edge leaves the screen unchanged. Screens that change push onto
// a back stack, like an activity stack.
class ScriptedAppDriver : public DeviceDriver {
 public:
  explicit ScriptedAppDriver(BehaviorModel model, SimulatorOptions options = {});

  Observation launch_cold() override;
  Observation observe() override;
  PerformStatus perform(const Action& action, std::size_t component_index,
                        std::chrono::milliseconds timeout) override;
  Raster capture_screenshot() override;
  bool can_go_back() const override;
  void go_back() override;

  const BehaviorModel& model() const { return model_; }
  const std::string& current_screen() const { return stack_.back(); }
  std::size_t perform_count() const { return perform_count_; }

 private:
  BehaviorModel model_;
  SimulatorOptions options_;
  std::vector<std::string> stack_;
  std::size_t perform_count_ = 0;
};

// Renders a screen: solid background, one outlined, labelled rectangle per
// component.
Raster render_screen(const BehaviorModel& model, const ScreenDecl& screen);

// Throws Error(kValidation) when the package has no behavior model.
std::unique_ptr<ScriptedAppDriver> simulate(const analysis::AppPackage& package,
                                            SimulatorOptions options = {});

}  // namespace fusion::dynamic
