#include <doctest.h>

#include "fusion/analysis/package.hpp"
#include "fusion/analysis/zip_reader.hpp"
#include "fusion/error.hpp"
#include "test_support.hpp"

using namespace fusion;
using namespace fusion::analysis;

// notes.zip holds the notes fixture under a "notes/" folder; layouts are
// stored, other entries deflated.
TEST_CASE("zip entries match the directory they were made from") {
  const auto entries = read_zip_file(testing::fixture_path("notes.zip"));
  const auto tree = testing::read_tree(testing::fixture_path("notes"));
  REQUIRE(entries.size() == tree.size());
  for (const auto& [name, contents] : tree) {
    INFO(name);
    REQUIRE(entries.count("notes/" + name) == 1);
    CHECK(entries.at("notes/" + name) == contents);
  }
}

TEST_CASE("a zipped package loads like the directory") {
  const AppPackage zipped = load_package(testing::fixture_path("notes.zip"));
  const AppPackage dir = load_package(testing::fixture_path("notes"));
  CHECK(zipped.layouts == dir.layouts);
  CHECK(zipped.menus == dir.menus);
  CHECK(zipped.source_index == dir.source_index);
  CHECK(zipped.behavior_json == dir.behavior_json);
}

TEST_CASE("corrupt archives are parse errors") {
  std::string bytes = testing::read_file(testing::fixture_path("notes.zip"));
  CHECK_THROWS_AS(read_zip("not a zip at all"), Error);
  CHECK_THROWS_AS(read_zip(bytes.substr(0, bytes.size() / 2)), Error);

  // Flip a byte inside the first stored entry's data so only the CRC catches it.
  const auto name_at = bytes.find("notes/layouts/");
  REQUIRE(name_at != std::string::npos);
  bytes[name_at + 40] ^= 0x20;
  try {
    read_zip(bytes);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}
