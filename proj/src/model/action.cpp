#include "fusion/action.hpp"

#include "fusion/error.hpp"

namespace fusion {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kValidation: return "validation_error";
    case ErrorCode::kConflict: return "conflict";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kState: return "invalid_state";
    case ErrorCode::kRange: return "range_error";
    case ErrorCode::kEnvironment: return "environment_error";
  }
  return "error";
}

std::string_view to_string(ActionKind kind) {
  switch (kind) {
    case ActionKind::kClick: return "CLICK";
    case ActionKind::kLongClick: return "LONG_CLICK";
    case ActionKind::kType: return "TYPE";
    case ActionKind::kSwipe: return "SWIPE";
  }
  return "CLICK";
}

std::optional<ActionKind> parse_action_kind(std::string_view name) {
  for (ActionKind kind : kAllActionKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view display_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::kClick: return "click";
    case ActionKind::kLongClick: return "long-click";
    case ActionKind::kType: return "type";
    case ActionKind::kSwipe: return "swipe";
  }
  return "click";
}

std::string_view to_string(SwipeDirection direction) {
  switch (direction) {
    case SwipeDirection::kUp: return "UP";
    case SwipeDirection::kDown: return "DOWN";
    case SwipeDirection::kLeft: return "LEFT";
    case SwipeDirection::kRight: return "RIGHT";
  }
  return "UP";
}

std::optional<SwipeDirection> parse_swipe_direction(std::string_view name) {
  for (SwipeDirection d : {SwipeDirection::kUp, SwipeDirection::kDown,
                           SwipeDirection::kLeft, SwipeDirection::kRight}) {
    if (to_string(d) == name) return d;
  }
  return std::nullopt;
}

}  // namespace fusion
