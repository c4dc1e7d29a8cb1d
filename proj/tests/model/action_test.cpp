#include <doctest.h>

#include "fusion/action.hpp"

using namespace fusion;

TEST_CASE("action kinds round-trip through their wire names") {
  for (ActionKind kind : kAllActionKinds) {
    auto parsed = parse_action_kind(to_string(kind));
    REQUIRE(parsed);
    CHECK(*parsed == kind);
  }
  CHECK(to_string(ActionKind::kLongClick) == "LONG_CLICK");
  CHECK(display_name(ActionKind::kLongClick) == "long-click");
  CHECK_FALSE(parse_action_kind("click"));
  CHECK_FALSE(parse_action_kind(""));
}

TEST_CASE("payloads attach only through the matching factory") {
  CHECK(Action().kind() == ActionKind::kClick);
  CHECK_FALSE(Action::click().text());
  CHECK(Action::type("hello").text() == std::optional<std::string>("hello"));
  CHECK_FALSE(Action::type().text());
  CHECK(Action::swipe(SwipeDirection::kLeft).direction() == SwipeDirection::kLeft);
  CHECK(Action::of(ActionKind::kType) == Action::type());
  CHECK(Action::type("a") != Action::type("b"));
}

TEST_CASE("swipe directions parse") {
  for (auto d : {SwipeDirection::kUp, SwipeDirection::kDown, SwipeDirection::kLeft, SwipeDirection::kRight}) {
    CHECK(parse_swipe_direction(to_string(d)) == d);
  }
  CHECK_FALSE(parse_swipe_direction("SIDEWAYS"));
}
