#include <doctest.h>

#include "fusion/dynamic/behavior.hpp"
#include "fusion/error.hpp"
#include "test_support.hpp"

using namespace fusion;
using namespace fusion::dynamic;

namespace {

ErrorCode failure(const std::string& json) {
  try {
    parse_behavior(json);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << json);
  return ErrorCode::kState;
}

}  // namespace

TEST_CASE("fixture behavior models parse") {
  const auto notes = parse_behavior(testing::read_file(testing::fixture_path("notes") / "behavior.json"));
  CHECK(notes.initial == "Main");
  CHECK(notes.screens.size() == 5);
  CHECK(notes.edges.size() == 7);
  CHECK(notes.screen("Main").activity == "Main");
  CHECK(notes.screen_dims.width == 360);

  const auto tasks = parse_behavior(testing::read_file(testing::fixture_path("tasks") / "behavior.json"));
  const auto& list = tasks.screen("list");
  CHECK(list.activity == "TaskList");
  CHECK(list.window == "main");
  CHECK(tasks.find_handle(list, "del2") == std::optional<std::size_t>(5));
  CHECK(tasks.edge_target("list", 5) == std::optional<std::string>("confirm"));
  CHECK_FALSE(tasks.edge_target("list", 1));
}

TEST_CASE("list form and defaults") {
  const auto m = parse_behavior(R"({"initial": "A", "screens": {"A": [
      {"id": "b", "type": "BUTTON", "bounds": [0, 0, 10, 10]},
      {"id": "t", "type": "text_field", "bounds": [0, 20, 10, 10]}]}})");
  const auto& a = m.screen("A");
  CHECK(a.window == "A");
  CHECK(a.components[0].clickable);
  CHECK_FALSE(a.components[1].clickable);
  CHECK(m.screen_dims == Size{360, 640});
}

TEST_CASE("invalid behavior models") {
  CHECK(failure("{") == ErrorCode::kParse);
  CHECK(failure(R"({"initial": "X", "screens": {"A": []}})") == ErrorCode::kValidation);
  CHECK(failure(R"({"initial": "A", "screens": {"A": [{"type": "button", "bounds": [350, 0, 20, 10]}]}})") ==
        ErrorCode::kValidation);
  CHECK(failure(R"({"initial": "A", "screens": {"A": [{"id": "b", "type": "button", "bounds": [0, 0, 10, 10]}]},
                    "edges": [{"from": "A", "component": "zz", "to": "A"}]})") == ErrorCode::kValidation);
  CHECK(failure(R"({"initial": "A", "screens": {"A": [{"id": "b", "type": "button", "bounds": [0, 0, 10, 10]}]},
                    "edges": [{"from": "A", "component": "b", "to": "B"}]})") == ErrorCode::kValidation);
  CHECK(failure(R"({"initial": "A", "screens": {"A": [{"id": "b", "type": "button", "bounds": [0, 0, 10, 10]}]},
                    "edges": [{"from": "A", "component": "b", "to": "A"},
                              {"from": "A", "component": "b", "to": "A"}]})") == ErrorCode::kValidation);
  // Two components share the handle.
  CHECK(failure(R"({"initial": "A", "screens": {"A": [{"id": "b", "type": "button", "bounds": [0, 0, 10, 10]},
                                                       {"id": "b", "type": "button", "bounds": [0, 20, 10, 10]}]},
                    "edges": [{"from": "A", "component": "b", "to": "A"}]})") == ErrorCode::kValidation);
  CHECK(failure(R"({"initial": "A", "screens": {"A": [{"id": "g", "type": "generic", "bounds": [0, 0, 10, 10]}]},
                    "edges": [{"from": "A", "component": "g", "to": "A"}]})") == ErrorCode::kValidation);
}
