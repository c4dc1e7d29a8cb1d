#include <doctest.h>

#include "fusion/dynamic/raster.hpp"
#include "fusion/error.hpp"
#include "fusion/store/hash.hpp"

using namespace fusion;
using namespace fusion::dynamic;

TEST_CASE("png encoding round-trips and is deterministic") {
  Raster r(40, 30, {10, 20, 30});
  r.fill_rect({5, 5, 10, 10}, {200, 0, 0});
  r.stroke_rect({0, 0, 40, 30}, {0, 0, 0});
  r.draw_text(2, 20, "OK 42", {255, 255, 255}, 36);
  const std::string png = encode_png(r);
  CHECK(png.substr(1, 3) == "PNG");
  CHECK(decode_png(png) == r);
  CHECK(encode_png(r) == png);
}

TEST_CASE("crop copies the exact region") {
  Raster r(10, 10, {0, 0, 0});
  r.set(3, 4, {1, 2, 3});
  const Raster c = r.crop({3, 4, 2, 2});
  CHECK(c.width() == 2);
  CHECK(c.at(0, 0) == Rgb{1, 2, 3});
  CHECK(c.at(1, 1) == Rgb{0, 0, 0});
  CHECK_THROWS_AS(r.crop({9, 9, 2, 2}), Error);
}

TEST_CASE("fill is clipped to the raster") {
  Raster r(4, 4, {0, 0, 0});
  r.fill_rect({2, 2, 10, 10}, {9, 9, 9});
  CHECK(r.at(3, 3) == Rgb{9, 9, 9});
  CHECK(r.at(1, 1) == Rgb{0, 0, 0});
}

TEST_CASE("text changes pixels") {
  Raster a(30, 10, {0, 0, 0});
  Raster b = a;
  b.draw_text(1, 1, "A", {255, 255, 255}, 28);
  CHECK_FALSE(a == b);
  Raster c = a;
  c.draw_text(1, 1, "B", {255, 255, 255}, 28);
  CHECK_FALSE(b == c);
}

TEST_CASE("colors are stable per label") {
  CHECK(color_for("screen:Main/Main") == color_for("screen:Main/Main"));
  CHECK_FALSE(color_for("screen:Main/Main") == color_for("screen:Main/Other"));
}

TEST_CASE("garbage is not a png") {
  CHECK_THROWS_AS(decode_png("definitely not png"), Error);
}

TEST_CASE("sha256 of known vectors") {
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}
