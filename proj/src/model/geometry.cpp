#include "fusion/geometry.hpp"

#include <array>
#include <string>

#include "fusion/error.hpp"

namespace fusion {
namespace {

constexpr std::array<std::string_view, kRelativeLocationCount> kWireNames = {
    "TOP_LEFT",    "TOP_CENTER",    "TOP_RIGHT",
    "MIDDLE_LEFT", "CENTER",        "MIDDLE_RIGHT",
    "BOTTOM_LEFT", "BOTTOM_CENTER", "BOTTOM_RIGHT"};

constexpr std::array<std::string_view, kRelativeLocationCount> kDisplayNames = {
    "top-left",    "top-center",    "top-right",
    "middle-left", "center",        "middle-right",
    "bottom-left", "bottom-center", "bottom-right"};

// Band of a doubled center coordinate within [0, 2*extent]. The center is
// on or before the first grid line iff 3*center2 <= 2*extent.
int band(long long origin, long long length, long long extent) {
  const long long scaled = 3 * (2 * origin + length);
  if (scaled <= 2 * extent) return 0;
  if (scaled <= 4 * extent) return 1;
  return 2;
}

}  // namespace

std::string_view to_string(RelativeLocation location) {
  return kWireNames[static_cast<int>(location)];
}

std::string_view display_name(RelativeLocation location) {
  return kDisplayNames[static_cast<int>(location)];
}

std::optional<RelativeLocation> parse_relative_location(std::string_view name) {
  for (int i = 0; i < kRelativeLocationCount; ++i) {
    if (kWireNames[i] == name) return static_cast<RelativeLocation>(i);
  }
  return std::nullopt;
}

RelativeLocation relative_location(const Rect& bounds, Size screen) {
  if (screen.width <= 0 || screen.height <= 0) {
    throw Error(ErrorCode::kRange, "screen dimensions must be positive");
  }
  if (!bounds.within(screen)) {
    throw Error(ErrorCode::kRange,
                "bounds [" + std::to_string(bounds.x) + "," + std::to_string(bounds.y) +
                    "," + std::to_string(bounds.width) + "," +
                    std::to_string(bounds.height) + "] outside " +
                    std::to_string(screen.width) + "x" + std::to_string(screen.height) +
                    " screen");
  }
  const int column = band(bounds.x, bounds.width, screen.width);
  const int row = band(bounds.y, bounds.height, screen.height);
  return static_cast<RelativeLocation>(row * 3 + column);
}

}  // namespace fusion
