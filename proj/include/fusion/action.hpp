#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace fusion {

enum class ActionKind { kClick, kLongClick, kType, kSwipe };

enum class SwipeDirection { kUp, kDown, kLeft, kRight };

inline constexpr ActionKind kAllActionKinds[] = {
    ActionKind::kClick, ActionKind::kLongClick, ActionKind::kType,
    ActionKind::kSwipe};

using ActionSet = std::set<ActionKind>;

// Wire names: CLICK, LONG_CLICK, TYPE, SWIPE.
std::string_view to_string(ActionKind kind);
std::optional<ActionKind> parse_action_kind(std::string_view name);
// Human label used in rendered reports ("click", "long-click", ...).
std::string_view display_name(ActionKind kind);

std::string_view to_string(SwipeDirection direction);
std::optional<SwipeDirection> parse_swipe_direction(std::string_view name);

// A user action. Entered text exists only on TYPE and a direction only on
// SWIPE; the factories are the only way to attach either. Defaults to click.
class Action {
 public:
  Action() = default;

  static Action click() { return Action(ActionKind::kClick); }
  static Action long_click() { return Action(ActionKind::kLongClick); }
  static Action type(std::optional<std::string> text = std::nullopt) {
    Action a(ActionKind::kType);
    a.text_ = std::move(text);
    return a;
  }
  static Action swipe(std::optional<SwipeDirection> direction = std::nullopt) {
    Action a(ActionKind::kSwipe);
    a.direction_ = direction;
    return a;
  }
  // Payload-free action of the given kind.
  static Action of(ActionKind kind) { return Action(kind); }

  ActionKind kind() const { return kind_; }
  const std::optional<std::string>& text() const { return text_; }
  std::optional<SwipeDirection> direction() const { return direction_; }

  bool operator==(const Action&) const = default;

 private:
  explicit Action(ActionKind kind) : kind_(kind) {}

  ActionKind kind_ = ActionKind::kClick;
  std::optional<std::string> text_;
  std::optional<SwipeDirection> direction_;
};

}  // namespace fusion
