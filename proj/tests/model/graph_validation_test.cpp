#include <doctest.h>

#include "fusion/error.hpp"
#include "fusion/graph_validation.hpp"

using namespace fusion;

namespace {

ComponentDescriptor button(const std::string& id) {
  ComponentDescriptor d;
  d.descriptor_id = id;
  d.component_type = ComponentType::kButton;
  d.allowed_actions = {ActionKind::kClick};
  return d;
}

ScreenState screen(const std::string& id, std::vector<ComponentInstance> instances) {
  ScreenState s;
  s.state_id = id;
  s.activity_name = "Main";
  s.window_name = id;
  s.screen_dims = {100, 100};
  s.instances = std::move(instances);
  return s;
}

ComponentInstance at(const std::string& id, int index, int y) {
  ComponentInstance i;
  i.descriptor_id = id;
  i.object_index = index;
  i.bounds = {0, y, 10, 10};
  return i;
}

struct Fixture {
  ComponentUniverse universe;
  EventFlowGraph graph;

  Fixture() {
    universe.descriptors = {button("a"), button("b")};
    graph.root_state = "s1";
    graph.states = {screen("s1", {at("a", 1, 0), at("a", 2, 20)}), screen("s2", {at("b", 1, 0)})};
    graph.transitions = {Transition{"s1", ActionKind::kClick, {"a", 2}, "s2", "", ""},
                         Transition{"s2", ActionKind::kClick, {"b", 1}, "s1", "", ""}};
  }

  void validate() const { validate_graph(graph, make_lookup(universe, graph)); }

  std::string failure() const {
    try {
      validate();
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kValidation);
      return e.what();
    }
    return {};
  }
};

}  // namespace

TEST_CASE("a well-formed graph validates") {
  Fixture f;
  CHECK_NOTHROW(f.validate());
}

TEST_CASE("every invariant violation is rejected") {
  SUBCASE("unreachable state") {
    Fixture f;
    f.graph.transitions.pop_back();
    f.graph.states.push_back(screen("s3", {}));
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("duplicate state id") {
    Fixture f;
    f.graph.states.push_back(screen("s2", {}));
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("missing root") {
    Fixture f;
    f.graph.root_state = "s9";
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("unknown descriptor") {
    Fixture f;
    f.graph.states[1].instances[0].descriptor_id = "zzz";
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("object indices with a gap") {
    Fixture f;
    f.graph.states[0].instances[1].object_index = 3;
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("bounds off screen") {
    Fixture f;
    f.graph.states[1].instances[0].bounds = {95, 0, 10, 10};
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("transition to an unknown state") {
    Fixture f;
    f.graph.transitions[1].to_state = "s7";
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("transition target not on the source state") {
    Fixture f;
    f.graph.transitions[1].target = {"a", 1};
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("action the descriptor does not allow") {
    Fixture f;
    f.graph.transitions[1].action = ActionKind::kType;
    CHECK_FALSE(f.failure().empty());
  }
  SUBCASE("repeated (state, action, target) triple") {
    Fixture f;
    f.graph.transitions.push_back(f.graph.transitions[0]);
    CHECK_FALSE(f.failure().empty());
  }
}

TEST_CASE("synthesized descriptors resolve through the graph") {
  Fixture f;
  auto d = button("dynamic:Main/BUTTON/@x");
  d.dynamic_only = true;
  f.graph.dynamic_descriptors.push_back(d);
  f.graph.states[1].instances.push_back(at(d.descriptor_id, 1, 40));
  CHECK_NOTHROW(f.validate());
}
