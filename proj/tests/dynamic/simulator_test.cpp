#include <doctest.h>

#include "fusion/analysis/package.hpp"
#include "fusion/dynamic/simulator.hpp"
#include "fusion/error.hpp"
#include "test_support.hpp"

using namespace fusion;
using namespace fusion::dynamic;

namespace {

constexpr std::chrono::milliseconds kTimeout{1000};

ScriptedAppDriver notes_driver(SimulatorOptions options = {}) {
  return ScriptedAppDriver(parse_behavior(testing::read_file(testing::fixture_path("notes") / "behavior.json")),
                           options);
}

std::size_t index_of(const Observation& obs, const std::string& id) {
  for (std::size_t i = 0; i < obs.components.size(); ++i) {
    if (obs.components[i].resource_id == id) return i;
  }
  FAIL("no component " << id);
  return 0;
}

}  // namespace

TEST_CASE("cold start always shows the initial screen") {
  auto driver = notes_driver();
  const Observation first = driver.launch_cold();
  driver.perform(Action::click(), index_of(first, "open_settings"), kTimeout);
  CHECK(driver.observe().activity_name == "Settings");
  const Observation again = driver.launch_cold();
  CHECK(again.activity_name == first.activity_name);
  CHECK(again.components.size() == first.components.size());
}

TEST_CASE("edges move, missing edges loop") {
  auto driver = notes_driver();
  Observation obs = driver.launch_cold();
  driver.perform(Action::click(), index_of(obs, "new_note"), kTimeout);
  obs = driver.observe();
  CHECK(obs.activity_name == "Editor");

  // Editor's body is not clickable; clicking it changes nothing.
  driver.perform(Action::click(), index_of(obs, "body"), kTimeout);
  CHECK(driver.current_screen() == "Editor");

  driver.perform(Action::click(), index_of(obs, "discard"), kTimeout);
  CHECK(driver.current_screen() == "Confirm");
  driver.go_back();
  CHECK(driver.current_screen() == "Editor");
  CHECK(driver.perform_count() == 3);
}

TEST_CASE("screenshots are deterministic and differ per screen") {
  auto a = notes_driver();
  auto b = notes_driver();
  a.launch_cold();
  b.launch_cold();
  CHECK(a.capture_screenshot() == b.capture_screenshot());
  const auto obs = a.observe();
  const Raster main_shot = a.capture_screenshot();
  a.perform(Action::click(), index_of(obs, "open_settings"), kTimeout);
  CHECK_FALSE(a.capture_screenshot() == main_shot);
  CHECK(main_shot.size() == Size{360, 640});
}

TEST_CASE("out-of-range component is rejected") {
  auto driver = notes_driver();
  driver.launch_cold();
  CHECK(driver.perform(Action::click(), 99, kTimeout) == PerformStatus::kRejected);
}

TEST_CASE("back navigation can be disabled") {
  auto driver = notes_driver({.supports_back = false});
  CHECK_FALSE(driver.can_go_back());
  CHECK_THROWS_AS(driver.go_back(), Error);
}

TEST_CASE("simulate needs a behavior model") {
  auto pkg = analysis::load_package(testing::fixture_path("notes"));
  CHECK(simulate(pkg)->launch_cold().activity_name == "Main");
  pkg.behavior_json.reset();
  CHECK_THROWS_AS(simulate(pkg), Error);
}
