#pragma once

#include <string>

#include <json.hpp>

#include "fusion/error.hpp"
#include "fusion/types.hpp"

namespace fusion {

using Json = nlohmann::json;

void to_json(Json& j, const Action& a);
void from_json(const Json& j, Action& a);
void to_json(Json& j, const Rect& r);
void from_json(const Json& j, Rect& r);
void to_json(Json& j, const Size& s);
void from_json(const Json& j, Size& s);
void to_json(Json& j, const ComponentDescriptor& d);
void from_json(const Json& j, ComponentDescriptor& d);
void to_json(Json& j, const ComponentUniverse& u);
void from_json(const Json& j, ComponentUniverse& u);
void to_json(Json& j, const InstanceRef& r);
void from_json(const Json& j, InstanceRef& r);
void to_json(Json& j, const ComponentInstance& i);
void from_json(const Json& j, ComponentInstance& i);
void to_json(Json& j, const ScreenState& s);
void from_json(const Json& j, ScreenState& s);
void to_json(Json& j, const Transition& t);
void from_json(const Json& j, Transition& t);
void to_json(Json& j, const EventFlowGraph& g);
void from_json(const Json& j, EventFlowGraph& g);
void to_json(Json& j, const StateHypothesis& h);
StateHypothesis hypothesis_from_json(const Json& j);
void to_json(Json& j, const ManualComponent& m);
void from_json(const Json& j, ManualComponent& m);
void to_json(Json& j, const ReproStep& s);
void from_json(const Json& j, ReproStep& s);
void to_json(Json& j, const ReportSession& s);
void from_json(const Json& j, ReportSession& s);
void to_json(Json& j, const ReportRow& r);
void from_json(const Json& j, ReportRow& r);
void to_json(Json& j, const BugReport& r);
void from_json(const Json& j, BugReport& r);

// Sorted keys, no insignificant whitespace, UTF-8.
inline std::string canonical(const Json& j) { return j.dump(); }

template <typename T>
std::string to_canonical(const T& value) {
  return canonical(Json(value));
}

// Parses a stored document; any structural problem becomes a ParseError
// naming `source`.
template <typename T>
T from_document(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text).get<T>();
  } catch (const std::exception& e) {
    throw ParseError(source, 0, 0, e.what());
  }
}

}  // namespace fusion
