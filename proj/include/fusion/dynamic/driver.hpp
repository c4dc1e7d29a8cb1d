#pragma once

#include <chrono>
#include <cstddef>
#include <string>
#include <vector>

#include "fusion/action.hpp"
#include "fusion/dynamic/raster.hpp"
#include "fusion/types.hpp"

namespace fusion::dynamic {

// One component in the runtime hierarchy as the device reports it.
struct RawComponent {
  std::string resource_id;
  ComponentType type = ComponentType::kGeneric;
  std::string text;
  Rect bounds;
  bool clickable = false;
  bool long_clickable = false;
  bool editable = false;
  bool swipeable = false;
};

struct Observation {
  std::string activity_name;
  std::string window_name;
  Size screen_dims;
  std::vector<RawComponent> components;
};

enum class PerformStatus { kOk, kTimeout, kRejected };

// Contract every device backend fulfils. A fixed app must show the same
// first screen after every launch_cold().
class DeviceDriver {
 public:
  virtual ~DeviceDriver() = default;

  virtual Observation launch_cold() = 0;
  virtual Observation observe() = 0;
  // component_index points into the components of the latest observation.
  virtual PerformStatus perform(const Action& action, std::size_t component_index,
                                std::chrono::milliseconds timeout) = 0;
  virtual Raster capture_screenshot() = 0;
  virtual bool can_go_back() const = 0;
  virtual void go_back() = 0;
};

}  // namespace fusion::dynamic
