#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace fusion {

struct Size {
  int width = 0;
  int height = 0;
  bool operator==(const Size&) const = default;
};

// Screen-pixel rectangle; origin is the top-left corner.
struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  bool operator==(const Rect&) const = default;
  bool within(Size screen) const {
    return x >= 0 && y >= 0 && width >= 0 && height >= 0 &&
           static_cast<long long>(x) + width <= screen.width &&
           static_cast<long long>(y) + height <= screen.height;
  }
};

// Row-major 3x3 partition of the screen.
enum class RelativeLocation {
  kTopLeft,
  kTopCenter,
  kTopRight,
  kMiddleLeft,
  kCenter,
  kMiddleRight,
  kBottomLeft,
  kBottomCenter,
  kBottomRight,
};

inline constexpr int kRelativeLocationCount = 9;

std::string_view to_string(RelativeLocation location);
std::optional<RelativeLocation> parse_relative_location(std::string_view name);
// "top-left", "center", ... for rendered reports.
std::string_view display_name(RelativeLocation location);

// Classifies the center of `bounds` against equal thirds of the screen. A
// center lying on a grid line goes to the left/top cell. Throws
// Error(kRange) if bounds is not inside the screen or the screen is empty.
RelativeLocation relative_location(const Rect& bounds, Size screen);

}  // namespace fusion
