#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fusion/geometry.hpp"

namespace fusion::dynamic {

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

// 8-bit RGB image, row-major.
class Raster {
 public:
  Raster() = default;
  Raster(int width, int height, Rgb fill);

  int width() const { return width_; }
  int height() const { return height_; }
  Size size() const { return {width_, height_}; }
  const std::vector<std::uint8_t>& pixels() const { return pixels_; }
  std::uint8_t* data() { return pixels_.data(); }

  Rgb at(int x, int y) const;
  void set(int x, int y, Rgb color);
  // Clipped to the raster.
  void fill_rect(const Rect& rect, Rgb color);
  void stroke_rect(const Rect& rect, Rgb color);
  // Upper-cased 3x5 glyphs at scale 1; characters without a glyph draw blank.
  void draw_text(int x, int y, std::string_view text, Rgb color, int max_width);

  // Throws Error(kRange) when rect is not inside the raster.
  Raster crop(const Rect& rect) const;

  bool operator==(const Raster&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

// Deterministic PNG encoding (no timestamps or text chunks).
std::string encode_png(const Raster& raster);
Raster decode_png(const std::string& png_bytes);

// Stable colour for a label, used for backgrounds and component fills.
Rgb color_for(std::string_view label);

}  // namespace fusion::dynamic
