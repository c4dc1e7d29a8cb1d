#include <doctest.h>

#include <atomic>
#include <set>
#include <thread>

#include "fusion/error.hpp"
#include "fusion/store/hash.hpp"
#include "fusion/store/model_store.hpp"
#include "fusion/store/serialize.hpp"
#include "test_support.hpp"

using namespace fusion;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kState;
}

BugReport report_with(std::uint64_t id, std::vector<ShotRef> shots) {
  BugReport r;
  r.report_id = id;
  r.app_id = "org.example.notes";
  r.app_version = "1.0";
  r.title = "t";
  r.screenshots = std::move(shots);
  return r;
}

}  // namespace

TEST_CASE("put then get round-trips the model") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  const auto app = testing::rip_fixture("notes");
  app.store_into(store);

  const auto view = store.get_model("org.example.notes", "1.0");
  CHECK(view->universe() == app.universe);
  CHECK(view->graph() == app.rip.graph);
  CHECK(store.list_apps() == std::vector<AppKey>{{"org.example.notes", "1.0"}});

  // A second handle reads the files, not the cache.
  ModelStore reopened(dir.path());
  CHECK(reopened.get_model("org.example.notes", "1.0")->graph() == app.rip.graph);
  CHECK(testing::read_file(dir / "apps/org.example.notes/1.0/graph.json") == to_canonical(app.rip.graph));
}

TEST_CASE("versions are append-only") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  const auto app = testing::rip_fixture("notes");
  app.store_into(store);
  CHECK(code_of([&] { app.store_into(store); }) == ErrorCode::kConflict);
  CHECK(code_of([&] { store.put_universe(app.universe); }) == ErrorCode::kConflict);
  CHECK(code_of([&] { store.put_graph("org.example.notes", "1.0", app.rip.graph); }) == ErrorCode::kConflict);
}

TEST_CASE("ingest then rip as two writes") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  const auto app = testing::rip_fixture("tasks");
  store.put_universe(app.universe, app.package.behavior_json);
  CHECK(store.has_universe("org.example.tasks", "2.3"));
  CHECK(store.get_behavior("org.example.tasks", "2.3") == app.package.behavior_json);
  CHECK(code_of([&] { store.get_model("org.example.tasks", "2.3"); }) == ErrorCode::kNotFound);
  // Screenshots must be in place before the graph.
  CHECK(code_of([&] { store.put_graph("org.example.tasks", "2.3", app.rip.graph); }) == ErrorCode::kValidation);
  for (const auto& [hash, png] : app.rip.screenshots) CHECK(store.put_screenshot(png) == hash);
  store.put_graph("org.example.tasks", "2.3", app.rip.graph);
  CHECK(store.get_model("org.example.tasks", "2.3")->graph() == app.rip.graph);
  CHECK(store.screenshot_hashes().size() == app.rip.screenshots.size());
}

TEST_CASE("graphs that do not validate are rejected") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  auto app = testing::rip_fixture("notes");
  for (const auto& [hash, png] : app.rip.screenshots) store.put_screenshot(png);
  app.rip.graph.transitions[0].target.descriptor_id = "layouts/none.xml#/screen[1]/button[1]";
  CHECK(code_of([&] { store.put_model("org.example.notes", "1.0", app.universe, app.rip.graph); }) ==
        ErrorCode::kValidation);
  CHECK(store.list_apps().empty());
}

TEST_CASE("queries delegate to the model") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  const auto app = testing::rip_fixture("notes");
  app.store_into(store);
  const auto& root = app.rip.graph.root_state;
  CHECK(store.components_for_state("org.example.notes", "1.0", root, ActionKind::kClick).size() == 3);
  CHECK(store.all_components("org.example.notes", "1.0", ActionKind::kClick).size() == 7);
  CHECK(store.transitions_from("org.example.notes", "1.0", root, ActionKind::kClick,
                               app.rip.graph.transitions[0].target) ==
        std::set<std::string>{app.rip.graph.transitions[0].to_state});
  CHECK(code_of([&] { store.all_components("nope", "1.0", ActionKind::kClick); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { store.get_model("../etc", "1.0"); }) == ErrorCode::kNotFound);
}

TEST_CASE("screenshots are content addressed") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  const ShotRef h = store.put_screenshot("png bytes");
  CHECK(h == sha256_hex("png bytes"));
  CHECK(store.put_screenshot("png bytes") == h);
  CHECK(store.get_screenshot(h) == "png bytes");
  CHECK(std::filesystem::exists(dir / ("shots/" + h + ".png")));
  CHECK(code_of([&] { store.get_screenshot(std::string(64, '0')); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { store.get_screenshot("../../etc/passwd"); }) == ErrorCode::kNotFound);
}

TEST_CASE("report ids start at one and survive restarts") {
  testing::TempDir dir;
  {
    ModelStore store(dir.path());
    CHECK(store.next_report_id() == 1);
    CHECK(store.next_report_id() == 2);
    for (int i = 3; i <= 7; ++i) store.next_report_id();
  }
  ModelStore store(dir.path());
  CHECK(store.next_report_id() == 8);
}

TEST_CASE("report ids are unique under concurrency") {
  testing::TempDir dir;
  ModelStore a(dir.path());
  ModelStore b(dir.path());
  std::vector<std::uint64_t> ids(200);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      ModelStore& store = t % 2 ? a : b;
      for (int i = t; i < 200; i += 4) ids[i] = store.next_report_id();
    });
  }
  for (auto& t : threads) t.join();
  CHECK(std::set<std::uint64_t>(ids.begin(), ids.end()).size() == 200);
  CHECK(*std::max_element(ids.begin(), ids.end()) == 200);
}

TEST_CASE("reports are append-only and referentially intact") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  const ShotRef shot = store.put_screenshot("img");
  const BugReport r = report_with(store.next_report_id(), {shot});
  store.put_report(r);
  CHECK(store.get_report(1) == r);
  CHECK(store.get_report_document(1) == to_canonical(r));
  CHECK(code_of([&] { store.put_report(r); }) == ErrorCode::kConflict);
  CHECK(code_of([&] { store.put_report(report_with(2, {std::string(64, 'e')})); }) == ErrorCode::kValidation);
  CHECK(code_of([&] { store.get_report(2); }) == ErrorCode::kNotFound);
}

TEST_CASE("sessions are rewritable") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  ReportSession s;
  s.session_id = store.next_session_id();
  CHECK(s.session_id == "session-1");
  s.title = "first";
  store.put_session(s);
  s.title = "second";
  store.put_session(s);
  CHECK(store.get_session("session-1").title == "second");
  CHECK(code_of([&] { store.get_session("session-2"); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { store.get_session("../x"); }) == ErrorCode::kNotFound);
}

TEST_CASE("readers never see partial documents") {
  testing::TempDir dir;
  ModelStore store(dir.path());
  ReportSession s;
  s.session_id = store.next_session_id();
  s.description = std::string(200000, 'x');
  store.put_session(s);
  std::atomic<bool> done{false};
  std::atomic<int> bad{0};
  std::thread reader([&] {
    ModelStore other(dir.path());
    while (!done) {
      try {
        other.get_session(s.session_id);
      } catch (const std::exception&) {
        ++bad;
      }
    }
  });
  for (int i = 0; i < 50; ++i) {
    s.title = std::to_string(i);
    store.put_session(s);
  }
  done = true;
  reader.join();
  CHECK(bad == 0);
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir.path())) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
}
