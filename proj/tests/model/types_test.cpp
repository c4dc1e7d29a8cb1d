#include <doctest.h>

#include <algorithm>
#include <random>

#include "fusion/error.hpp"
#include "fusion/types.hpp"

using namespace fusion;

namespace {

ComponentInstance inst(std::string id, int index, Rect bounds) {
  ComponentInstance i;
  i.descriptor_id = std::move(id);
  i.object_index = index;
  i.bounds = bounds;
  return i;
}

std::vector<int> indices(const std::vector<ComponentInstance>& v) {
  std::vector<int> out;
  for (const auto& i : v) out.push_back(i.object_index);
  return out;
}

}  // namespace

TEST_CASE("order_instances examples") {
  CHECK(order_instances({}).empty());

  auto ordered = order_instances({inst("a", 1, {0, 10, 5, 5}), inst("b", 1, {0, 5, 5, 5})});
  CHECK(ordered[0].descriptor_id == "b");

  ordered = order_instances({inst("a", 3, {1, 1, 1, 1}), inst("a", 1, {1, 1, 1, 1}), inst("a", 2, {1, 1, 1, 1})});
  CHECK(indices(ordered) == std::vector<int>{1, 2, 3});
}

TEST_CASE("order_instances is idempotent and permutation invariant") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int round = 0; round < 200; ++round) {
    std::vector<ComponentInstance> items;
    for (int i = 0; i < 8; ++i) {
      items.push_back(inst(std::string(1, static_cast<char>('a' + coord(rng))), i + 1,
                           {coord(rng), coord(rng), 1, 1}));
    }
    const auto once = order_instances(items);
    CHECK(order_instances(once) == once);
    std::shuffle(items.begin(), items.end(), rng);
    CHECK(order_instances(items) == once);
  }
}

TEST_CASE("component types have wire and display names") {
  for (int i = 0; i <= static_cast<int>(ComponentType::kGeneric); ++i) {
    const auto t = static_cast<ComponentType>(i);
    CHECK(parse_component_type(to_string(t)) == t);
  }
  CHECK(to_string(ComponentType::kTextField) == "TEXT_FIELD");
  CHECK(display_name(ComponentType::kTextField) == "text field");
  CHECK_FALSE(parse_component_type("WIDGET"));
}

TEST_CASE("hypotheses") {
  CHECK_FALSE(StateHypothesis::unknown().is_known());
  auto h = StateHypothesis::known({"s0001", "s0002"});
  CHECK(h.is_known());
  CHECK(h.states().size() == 2);
  CHECK_THROWS_AS(StateHypothesis::known({}), Error);
}

TEST_CASE("universe lookup is by exact id") {
  ComponentUniverse u;
  for (const char* id : {"layouts/a.xml#/screen[1]/button[1]", "layouts/a.xml#/screen[1]/button[2]"}) {
    ComponentDescriptor d;
    d.descriptor_id = id;
    u.descriptors.push_back(d);
  }
  CHECK(u.find("layouts/a.xml#/screen[1]/button[2]") == &u.descriptors[1]);
  CHECK(u.find("layouts/a.xml#/screen[1]/button[3]") == nullptr);
}
