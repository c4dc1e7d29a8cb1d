#include <doctest.h>

#include "fusion/error.hpp"
#include "fusion/store/serialize.hpp"
#include "test_support.hpp"

using namespace fusion;

namespace {

template <typename T>
void check_round_trip(const T& value) {
  const std::string text = to_canonical(value);
  const T back = from_document<T>(text, "test");
  CHECK(back == value);
  CHECK(to_canonical(back) == text);
}

ReportSession sample_session() {
  ReportSession s;
  s.session_id = "session-3";
  s.app_id = "org.example.notes";
  s.app_version = "1.0";
  s.reporter_name = "Rémi";
  s.orientation = Orientation::kLandscape;
  s.title = "Crash on save";
  s.hypothesis = StateHypothesis::known({"s0002"});
  s.steps.push_back(ReproStep{1, Action::click(), ModelTarget{"layouts/main.xml#/screen[1]/button[1]", 1, "s0001"},
                              "first", std::string(64, 'a')});
  s.steps.push_back(ReproStep{2, Action::type("milk"), ModelTarget{"layouts/editor.xml#/screen[1]/text_field[1]", 1, "s0002"},
                              "", std::nullopt});
  s.steps.push_back(ReproStep{3, Action::swipe(SwipeDirection::kUp),
                              ManualComponent{ComponentType::kListItem, "Row", RelativeLocation::kBottomRight}, "", {}});
  s.finalized = true;
  s.report_id = 4;
  s.created_at = "2026-01-01T00:00:00Z";
  return s;
}

}  // namespace

TEST_CASE("ripped models round-trip byte for byte") {
  for (const char* name : {"notes", "tasks"}) {
    const auto app = testing::rip_fixture(name);
    check_round_trip(app.universe);
    check_round_trip(app.rip.graph);
  }
}

TEST_CASE("sessions and reports round-trip") {
  check_round_trip(sample_session());
  BugReport r;
  r.report_id = 9;
  r.title = "t";
  r.steps = sample_session().steps;
  r.rows.push_back(ReportRow{1, ActionKind::kClick, "", ComponentType::kButton, "New", RelativeLocation::kBottomRight,
                             "org.example.notes.MainActivity", std::string(64, 'b'), "", false});
  r.rows.push_back(ReportRow{3, ActionKind::kSwipe, "", ComponentType::kListItem, "Row", RelativeLocation::kBottomRight,
                             "", std::nullopt, "", true});
  r.screenshots = {std::string(64, 'c')};
  check_round_trip(r);
}

TEST_CASE("canonical form sorts keys and has no whitespace") {
  const std::string text = to_canonical(sample_session());
  CHECK(text.find('\n') == std::string::npos);
  CHECK(text.find(": ") == std::string::npos);
  CHECK(text.find("\"app_id\"") < text.find("\"title\""));
  // Non-ASCII stays UTF-8.
  CHECK(text.find("Rémi") != std::string::npos);
}

TEST_CASE("wire shapes") {
  CHECK(Json(Action::type("x")) == Json::parse(R"({"kind": "TYPE", "text": "x"})"));
  CHECK(Json(Action::click()) == Json::parse(R"({"kind": "CLICK"})"));
  CHECK(Json(Rect{1, 2, 3, 4}) == Json::parse("[1, 2, 3, 4]"));
  CHECK(Json(StateHypothesis::unknown()) == Json::parse(R"({"kind": "UNKNOWN"})"));
  CHECK(Json(StateHypothesis::known({"b", "a"})) == Json::parse(R"({"kind": "KNOWN", "states": ["a", "b"]})"));
  CHECK(hypothesis_from_json(Json::parse(R"({"kind": "KNOWN", "states": ["a"]})")) ==
        StateHypothesis::known({"a"}));
}

TEST_CASE("bad documents are parse errors naming the source") {
  try {
    from_document<ReportSession>(R"({"session_id": 5})", "sessions/x.json");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.file() == "sessions/x.json");
  }
  CHECK_THROWS_AS(from_document<EventFlowGraph>("{", "g"), ParseError);
  CHECK_THROWS_AS(from_document<Action>(R"({"kind": "PINCH"})", "a"), ParseError);
}
