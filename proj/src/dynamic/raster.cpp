#include "fusion/dynamic/raster.hpp"

#include <png.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstring>
#include <vector>

#include "fusion/error.hpp"

namespace fusion::dynamic {
namespace {

// 3x5 glyphs, one bit per pixel, rows top to bottom, MSB on the left.
constexpr std::array<std::uint16_t, 36> kGlyphs = {
    0b010'101'111'101'101, 0b110'101'110'101'110, 0b011'100'100'100'011,  // A B C
    0b110'101'101'101'110, 0b111'100'110'100'111, 0b111'100'110'100'100,  // D E F
    0b011'100'101'101'011, 0b101'101'111'101'101, 0b111'010'010'010'111,  // G H I
    0b001'001'001'101'010, 0b101'101'110'101'101, 0b100'100'100'100'111,  // J K L
    0b101'111'111'101'101, 0b110'101'101'101'101, 0b010'101'101'101'010,  // M N O
    0b110'101'110'100'100, 0b010'101'101'110'011, 0b110'101'110'101'101,  // P Q R
    0b011'100'010'001'110, 0b111'010'010'010'010, 0b101'101'101'101'111,  // S T U
    0b101'101'101'101'010, 0b101'101'111'111'101, 0b101'101'010'101'101,  // V W X
    0b101'101'010'010'010, 0b111'001'010'100'111,                          // Y Z
    0b111'101'101'101'111, 0b010'110'010'010'111, 0b110'001'010'100'111,  // 0 1 2
    0b110'001'010'001'110, 0b101'101'111'001'001, 0b111'100'110'001'110,  // 3 4 5
    0b011'100'111'101'111, 0b111'001'010'010'010, 0b111'101'111'101'111,  // 6 7 8
    0b111'101'111'001'110,                                                 // 9
};

std::uint16_t glyph(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (std::isalpha(u)) return kGlyphs[std::toupper(u) - 'A'];
  if (std::isdigit(u)) return kGlyphs[26 + (u - '0')];
  return 0;
}

}  // namespace

Raster::Raster(int width, int height, Rgb fill)
    : width_(std::max(width, 0)), height_(std::max(height, 0)) {
  pixels_.resize(static_cast<std::size_t>(width_) * height_ * 3);
  for (std::size_t i = 0; i < pixels_.size(); i += 3) {
    pixels_[i] = fill.r;
    pixels_[i + 1] = fill.g;
    pixels_[i + 2] = fill.b;
  }
}

Rgb Raster::at(int x, int y) const {
  const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
  return {pixels_[i], pixels_[i + 1], pixels_[i + 2]};
}

void Raster::set(int x, int y, Rgb color) {
  if (x < 0 || y < 0 || x >= width_ || y >= height_) return;
  const std::size_t i = (static_cast<std::size_t>(y) * width_ + x) * 3;
  pixels_[i] = color.r;
  pixels_[i + 1] = color.g;
  pixels_[i + 2] = color.b;
}

void Raster::fill_rect(const Rect& rect, Rgb color) {
  const int x0 = std::max(rect.x, 0), y0 = std::max(rect.y, 0);
  const int x1 = std::min(rect.x + rect.width, width_), y1 = std::min(rect.y + rect.height, height_);
  for (int y = y0; y < y1; ++y) {
    for (int x = x0; x < x1; ++x) set(x, y, color);
  }
}

void Raster::stroke_rect(const Rect& rect, Rgb color) {
  if (rect.width <= 0 || rect.height <= 0) return;
  fill_rect({rect.x, rect.y, rect.width, 1}, color);
  fill_rect({rect.x, rect.y + rect.height - 1, rect.width, 1}, color);
  fill_rect({rect.x, rect.y, 1, rect.height}, color);
  fill_rect({rect.x + rect.width - 1, rect.y, 1, rect.height}, color);
}

void Raster::draw_text(int x, int y, std::string_view text, Rgb color, int max_width) {
  int pen = x;
  for (char c : text) {
    if (pen + 3 > x + max_width) break;
    const std::uint16_t bits = glyph(c);
    for (int row = 0; row < 5; ++row) {
      for (int col = 0; col < 3; ++col) {
        if (bits & (1u << (14 - (row * 3 + col)))) set(pen + col, y + row, color);
      }
    }
    pen += 4;
  }
}

Raster Raster::crop(const Rect& rect) const {
  if (!rect.within(size())) throw Error(ErrorCode::kRange, "crop rectangle outside raster");
  Raster out(rect.width, rect.height, Rgb{});
  for (int y = 0; y < rect.height; ++y) {
    const auto* src = pixels_.data() + (static_cast<std::size_t>(rect.y + y) * width_ + rect.x) * 3;
    std::memcpy(out.pixels_.data() + static_cast<std::size_t>(y) * rect.width * 3, src,
                static_cast<std::size_t>(rect.width) * 3);
  }
  return out;
}

namespace {

void append_to_string(png_structp png, png_bytep data, png_size_t length) {
  static_cast<std::string*>(png_get_io_ptr(png))->append(reinterpret_cast<const char*>(data), length);
}

void no_flush(png_structp) {}

}  // namespace

std::string encode_png(const Raster& raster) {
  if (raster.width() == 0 || raster.height() == 0) {
    throw Error(ErrorCode::kRange, "cannot encode an empty raster");
  }
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error(ErrorCode::kEnvironment, "png encoder allocation failed");
  }
  std::string out;
  std::vector<png_bytep> rows(static_cast<std::size_t>(raster.height()));
  auto* pixels = const_cast<png_bytep>(raster.pixels().data());
  for (std::size_t y = 0; y < rows.size(); ++y) rows[y] = pixels + y * raster.width() * 3;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error(ErrorCode::kEnvironment, "png encoding failed");
  }
  png_set_write_fn(png, &out, append_to_string, no_flush);
  // Flat UI colors compress well with a fixed SUB filter; adaptive filtering
  // dominates the cost otherwise.
  png_set_filter(png, PNG_FILTER_TYPE_BASE, PNG_FILTER_SUB);
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, static_cast<png_uint_32>(raster.width()), static_cast<png_uint_32>(raster.height()), 8,
               PNG_COLOR_TYPE_RGB, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_BASE, PNG_FILTER_TYPE_BASE);
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

Raster decode_png(const std::string& png_bytes) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&image, png_bytes.data(), png_bytes.size())) {
    throw Error(ErrorCode::kParse, std::string("png decoding failed: ") + image.message);
  }
  image.format = PNG_FORMAT_RGB;
  Raster out(static_cast<int>(image.width), static_cast<int>(image.height), Rgb{});
  if (!png_image_finish_read(&image, nullptr, out.data(), 0, nullptr)) {
    png_image_free(&image);
    throw Error(ErrorCode::kParse, std::string("png decoding failed: ") + image.message);
  }
  return out;
}

Rgb color_for(std::string_view label) {
  std::uint32_t h = 2166136261u;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619u;
  }
  // Keep channels in a mid range so outlines and text stay visible.
  return {static_cast<std::uint8_t>(96 + (h & 0x7F)), static_cast<std::uint8_t>(96 + ((h >> 8) & 0x7F)),
          static_cast<std::uint8_t>(96 + ((h >> 16) & 0x7F))};
}

}  // namespace fusion::dynamic
