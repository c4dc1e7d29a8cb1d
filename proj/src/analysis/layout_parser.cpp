#include "fusion/analysis/layout_parser.hpp"

#include <expat.h>

#include <map>
#include <memory>
#include <optional>

#include "fusion/error.hpp"

namespace fusion::analysis {
namespace {

enum class Dialect { kLayout, kMenu };

struct Frame {
  std::map<std::string, int> child_counts;
  std::string path;
};

class MarkupWalker {
 public:
  MarkupWalker(Dialect dialect, std::string file_name)
      : dialect_(dialect), file_name_(std::move(file_name)) {}

  ParsedFile run(const std::string& contents) {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(
        XML_ParserCreate("UTF-8"), &XML_ParserFree);
    if (!parser) throw Error(ErrorCode::kEnvironment, "cannot allocate XML parser");
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &MarkupWalker::on_start, &MarkupWalker::on_end);

    frames_.push_back(Frame{});
    const auto status = XML_Parse(parser_, contents.data(),
                                  static_cast<int>(contents.size()), XML_TRUE);
    if (pending_) std::rethrow_exception(pending_);
    if (status != XML_STATUS_OK) {
      throw ParseError(file_name_, static_cast<int>(XML_GetCurrentLineNumber(parser_)),
                       static_cast<int>(XML_GetCurrentColumnNumber(parser_)) + 1,
                       XML_ErrorString(XML_GetErrorCode(parser_)));
    }
    return std::move(result_);
  }

 private:
  static void on_start(void* user, const XML_Char* name, const XML_Char** attrs) {
    auto* self = static_cast<MarkupWalker*>(user);
    try {
      self->start(name, attrs);
    } catch (...) {
      self->pending_ = std::current_exception();
      XML_StopParser(self->parser_, XML_FALSE);
    }
  }

  static void on_end(void* user, const XML_Char*) {
    auto* self = static_cast<MarkupWalker*>(user);
    if (self->frames_.size() > 1) self->frames_.pop_back();
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(file_name_, static_cast<int>(XML_GetCurrentLineNumber(parser_)),
                     static_cast<int>(XML_GetCurrentColumnNumber(parser_)) + 1, what);
  }

  bool is_container(const std::string& tag) const {
    return dialect_ == Dialect::kLayout ? tag == "screen" : tag == "menu";
  }

  std::optional<ComponentType> known_type(const std::string& tag) const {
    if (dialect_ == Dialect::kMenu) {
      if (tag == "item") return ComponentType::kMenuItem;
      return std::nullopt;
    }
    static const std::map<std::string, ComponentType> kTags = {
        {"button", ComponentType::kButton},       {"spinner", ComponentType::kSpinner},
        {"checkbox", ComponentType::kCheckbox},   {"text_field", ComponentType::kTextField},
        {"list_item", ComponentType::kListItem},  {"image", ComponentType::kImage},
        {"generic", ComponentType::kGeneric},
    };
    auto it = kTags.find(tag);
    if (it == kTags.end()) return std::nullopt;
    return it->second;
  }

  bool parse_bool(const std::string& attr, const std::string& value) const {
    if (value == "true") return true;
    if (value == "false") return false;
    fail("attribute '" + attr + "' must be true or false, got '" + value + "'");
  }

  void start(const std::string& tag, const XML_Char** attrs) {
    Frame& parent = frames_.back();
    const int ordinal = ++parent.child_counts[tag];
    Frame frame;
    frame.path = parent.path + "/" + tag + "[" + std::to_string(ordinal) + "]";

    if (!is_container(tag)) emit(tag, frame.path, attrs);
    frames_.push_back(std::move(frame));
  }

  void emit(const std::string& tag, const std::string& path, const XML_Char** attrs) {
    std::optional<ComponentType> type = known_type(tag);
    if (!type) {
      result_.warnings.push_back(file_name_ + ":" +
                                 std::to_string(XML_GetCurrentLineNumber(parser_)) +
                                 ": unknown component tag '" + tag + "' treated as generic");
    }
    ComponentDescriptor d;
    d.component_type = type.value_or(ComponentType::kGeneric);

    const bool clickable_by_default =
        d.component_type == ComponentType::kButton || d.component_type == ComponentType::kMenuItem;
    bool clickable = clickable_by_default;
    bool long_clickable = false;
    bool editable = false;
    bool swipeable = false;
    for (const XML_Char** a = attrs; *a; a += 2) {
      const std::string key = a[0];
      const std::string value = a[1];
      if (key == "id") {
        d.resource_id = value;
      } else if (key == "text") {
        d.default_text = value;
      } else if (key == "clickable") {
        clickable = parse_bool(key, value);
      } else if (key == "long_clickable") {
        long_clickable = parse_bool(key, value);
      } else if (key == "editable") {
        editable = parse_bool(key, value);
      } else if (key == "swipeable") {
        swipeable = parse_bool(key, value);
      }
    }
    if (dialect_ == Dialect::kMenu && d.component_type == ComponentType::kMenuItem) {
      clickable = true;
    }
    if (clickable) d.allowed_actions.insert(ActionKind::kClick);
    if (long_clickable) d.allowed_actions.insert(ActionKind::kLongClick);
    if (swipeable) d.allowed_actions.insert(ActionKind::kSwipe);
    if (editable) {
      if (d.component_type == ComponentType::kTextField) {
        d.allowed_actions.insert(ActionKind::kType);
      } else {
        result_.warnings.push_back(file_name_ + ":" +
                                   std::to_string(XML_GetCurrentLineNumber(parser_)) +
                                   ": editable ignored on non-text_field '" + tag + "'");
      }
    }
    d.layout_origin = {file_name_, path};
    result_.nodes.push_back(ParsedNode{std::move(d), path});
  }

  Dialect dialect_;
  std::string file_name_;
  XML_Parser parser_ = nullptr;
  std::vector<Frame> frames_;
  ParsedFile result_;
  std::exception_ptr pending_;
};

}  // namespace

ParsedFile parse_layout_file(const std::string& contents, const std::string& file_name) {
  return MarkupWalker(Dialect::kLayout, file_name).run(contents);
}

ParsedFile parse_menu_file(const std::string& contents, const std::string& file_name) {
  return MarkupWalker(Dialect::kMenu, file_name).run(contents);
}

}  // namespace fusion::analysis
