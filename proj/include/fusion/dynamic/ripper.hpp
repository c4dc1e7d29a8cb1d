#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "fusion/dynamic/driver.hpp"
#include "fusion/types.hpp"

namespace fusion::dynamic {

struct RipLimits {
  std::size_t max_states = 1000;
  std::size_t max_actions = 100000;
  std::chrono::milliseconds per_action_timeout{5000};
  // Cold-restart attempts before giving up on re-localizing a state.
  int relocalize_retries = 3;
};

struct RipResult {
  EventFlowGraph graph;
  std::map<ShotRef, std::string> screenshots;  // hash -> PNG bytes
  std::vector<std::string> log;
  std::size_t actions_performed = 0;
};

// Depth-first exploration from a cold start. At each newly discovered state
// every clickable instance is clicked once, in instance order; new screens
// are explored before the next sibling. Transitions record before/after
// screenshots; each instance carries a crop of its state's screenshot.
// Hitting a limit, or failing to re-localize a state, stops exploration
// and marks the graph truncated.
RipResult rip(DeviceDriver& driver, const ComponentUniverse& universe, const RipLimits& limits);

}  // namespace fusion::dynamic
