#include "fusion/store/serialize.hpp"

#include <stdexcept>

namespace fusion {
namespace {

template <typename Enum, typename Parser>
Enum parse_enum(const Json& j, Parser parser, const char* what) {
  const auto name = j.get<std::string>();
  if (auto value = parser(name)) return *value;
  throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "'");
}

std::string enum_name(auto value) { return std::string(to_string(value)); }

}  // namespace

void to_json(Json& j, const Action& a) {
  j = Json{{"kind", enum_name(a.kind())}};
  if (a.text()) j["text"] = *a.text();
  if (a.direction()) j["direction"] = enum_name(*a.direction());
}

void from_json(const Json& j, Action& a) {
  const auto kind = parse_enum<ActionKind>(j.at("kind"), parse_action_kind, "action");
  switch (kind) {
    case ActionKind::kType:
      a = Action::type(j.contains("text") ? std::optional(j.at("text").get<std::string>()) : std::nullopt);
      break;
    case ActionKind::kSwipe:
      a = Action::swipe(j.contains("direction")
                            ? std::optional(parse_enum<SwipeDirection>(j.at("direction"),
                                                                       parse_swipe_direction, "direction"))
                            : std::nullopt);
      break;
    default:
      a = Action::of(kind);
  }
}

void to_json(Json& j, const Rect& r) { j = Json::array({r.x, r.y, r.width, r.height}); }

void from_json(const Json& j, Rect& r) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("rect must be [x, y, w, h]");
  r = {j[0].get<int>(), j[1].get<int>(), j[2].get<int>(), j[3].get<int>()};
}

void to_json(Json& j, const Size& s) { j = Json::array({s.width, s.height}); }

void from_json(const Json& j, Size& s) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("size must be [w, h]");
  s = {j[0].get<int>(), j[1].get<int>()};
}

void to_json(Json& j, const ComponentDescriptor& d) {
  Json actions = Json::array();
  for (ActionKind kind : d.allowed_actions) actions.push_back(enum_name(kind));
  j = Json{{"descriptor_id", d.descriptor_id},
           {"component_type", enum_name(d.component_type)},
           {"resource_id", d.resource_id},
           {"default_text", d.default_text},
           {"allowed_actions", actions},
           {"containing_activities", d.containing_activities},
           {"declaring_sources", d.declaring_sources},
           {"layout_origin", {{"file", d.layout_origin.file}, {"node_path", d.layout_origin.node_path}}},
           {"dynamic_only", d.dynamic_only}};
}

void from_json(const Json& j, ComponentDescriptor& d) {
  d.descriptor_id = j.at("descriptor_id").get<std::string>();
  d.component_type = parse_enum<ComponentType>(j.at("component_type"), parse_component_type, "component type");
  d.resource_id = j.at("resource_id").get<std::string>();
  d.default_text = j.at("default_text").get<std::string>();
  d.allowed_actions.clear();
  for (const auto& a : j.at("allowed_actions")) {
    d.allowed_actions.insert(parse_enum<ActionKind>(a, parse_action_kind, "action"));
  }
  d.containing_activities = j.at("containing_activities").get<std::vector<std::string>>();
  d.declaring_sources = j.at("declaring_sources").get<std::vector<std::string>>();
  d.layout_origin.file = j.at("layout_origin").at("file").get<std::string>();
  d.layout_origin.node_path = j.at("layout_origin").at("node_path").get<std::string>();
  d.dynamic_only = j.at("dynamic_only").get<bool>();
}

void to_json(Json& j, const ComponentUniverse& u) {
  j = Json{{"app_id", u.app_id},
           {"app_version", u.app_version},
           {"main_activity", u.main_activity},
           {"descriptors", u.descriptors},
           {"activity_index", u.activity_index},
           {"activity_sources", u.activity_sources}};
}

void from_json(const Json& j, ComponentUniverse& u) {
  u.app_id = j.at("app_id").get<std::string>();
  u.app_version = j.at("app_version").get<std::string>();
  u.main_activity = j.at("main_activity").get<std::string>();
  u.descriptors = j.at("descriptors").get<std::vector<ComponentDescriptor>>();
  u.activity_index = j.at("activity_index").get<std::map<std::string, std::vector<std::string>>>();
  u.activity_sources = j.at("activity_sources").get<std::map<std::string, std::string>>();
}

void to_json(Json& j, const InstanceRef& r) {
  j = Json{{"descriptor_id", r.descriptor_id}, {"object_index", r.object_index}};
}

void from_json(const Json& j, InstanceRef& r) {
  r.descriptor_id = j.at("descriptor_id").get<std::string>();
  r.object_index = j.at("object_index").get<int>();
}

void to_json(Json& j, const ComponentInstance& i) {
  j = Json{{"descriptor_id", i.descriptor_id},
           {"object_index", i.object_index},
           {"bounds", i.bounds},
           {"runtime_text", i.runtime_text},
           {"component_screenshot", i.component_screenshot}};
}

void from_json(const Json& j, ComponentInstance& i) {
  i.descriptor_id = j.at("descriptor_id").get<std::string>();
  i.object_index = j.at("object_index").get<int>();
  i.bounds = j.at("bounds").get<Rect>();
  i.runtime_text = j.at("runtime_text").get<std::string>();
  i.component_screenshot = j.at("component_screenshot").get<std::string>();
}

void to_json(Json& j, const ScreenState& s) {
  j = Json{{"state_id", s.state_id},         {"activity_name", s.activity_name},
           {"window_name", s.window_name},   {"instances", s.instances},
           {"full_screenshot", s.full_screenshot}, {"screen_dims", s.screen_dims},
           {"signature", s.signature}};
}

void from_json(const Json& j, ScreenState& s) {
  s.state_id = j.at("state_id").get<std::string>();
  s.activity_name = j.at("activity_name").get<std::string>();
  s.window_name = j.at("window_name").get<std::string>();
  s.instances = j.at("instances").get<std::vector<ComponentInstance>>();
  s.full_screenshot = j.at("full_screenshot").get<std::string>();
  s.screen_dims = j.at("screen_dims").get<Size>();
  s.signature = j.at("signature").get<std::string>();
}

void to_json(Json& j, const Transition& t) {
  j = Json{{"from_state", t.from_state},
           {"action", enum_name(t.action)},
           {"target", t.target},
           {"to_state", t.to_state},
           {"before_screenshot", t.before_screenshot},
           {"after_screenshot", t.after_screenshot}};
}

void from_json(const Json& j, Transition& t) {
  t.from_state = j.at("from_state").get<std::string>();
  t.action = parse_enum<ActionKind>(j.at("action"), parse_action_kind, "action");
  t.target = j.at("target").get<InstanceRef>();
  t.to_state = j.at("to_state").get<std::string>();
  t.before_screenshot = j.at("before_screenshot").get<std::string>();
  t.after_screenshot = j.at("after_screenshot").get<std::string>();
}

void to_json(Json& j, const EventFlowGraph& g) {
  j = Json{{"root_state", g.root_state},
           {"states", g.states},
           {"transitions", g.transitions},
           {"dynamic_descriptors", g.dynamic_descriptors},
           {"truncated", g.truncated}};
}

void from_json(const Json& j, EventFlowGraph& g) {
  g.root_state = j.at("root_state").get<std::string>();
  g.states = j.at("states").get<std::vector<ScreenState>>();
  g.transitions = j.at("transitions").get<std::vector<Transition>>();
  g.dynamic_descriptors = j.at("dynamic_descriptors").get<std::vector<ComponentDescriptor>>();
  g.truncated = j.at("truncated").get<bool>();
}

void to_json(Json& j, const StateHypothesis& h) {
  if (h.is_known()) {
    j = Json{{"kind", "KNOWN"}, {"states", h.states()}};
  } else {
    j = Json{{"kind", "UNKNOWN"}};
  }
}

StateHypothesis hypothesis_from_json(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "UNKNOWN") return StateHypothesis::unknown();
  if (kind == "KNOWN") return StateHypothesis::known(j.at("states").get<std::set<std::string>>());
  throw std::invalid_argument("unknown hypothesis kind '" + kind + "'");
}

void to_json(Json& j, const ManualComponent& m) {
  j = Json{{"component_type", enum_name(m.component_type)},
           {"text", m.text},
           {"relative_location", enum_name(m.relative_location)}};
}

void from_json(const Json& j, ManualComponent& m) {
  m.component_type = parse_enum<ComponentType>(j.at("component_type"), parse_component_type, "component type");
  m.text = j.at("text").get<std::string>();
  m.relative_location =
      parse_enum<RelativeLocation>(j.at("relative_location"), parse_relative_location, "relative location");
}

void to_json(Json& j, const ReproStep& s) {
  Json target;
  if (const auto* model = std::get_if<ModelTarget>(&s.target)) {
    target = Json{{"kind", "model"},
                  {"descriptor_id", model->descriptor_id},
                  {"object_index", model->object_index},
                  {"state_id", model->state_id}};
  } else {
    target = std::get<ManualComponent>(s.target);
    target["kind"] = "manual";
  }
  j = Json{{"step_index", s.step_index},
           {"action", s.action},
           {"target", target},
           {"note", s.note},
           {"confirmed_screenshot", s.confirmed_full_screenshot ? Json(*s.confirmed_full_screenshot) : Json()}};
}

void from_json(const Json& j, ReproStep& s) {
  s.step_index = j.at("step_index").get<int>();
  s.action = j.at("action").get<Action>();
  const Json& target = j.at("target");
  if (target.at("kind").get<std::string>() == "manual") {
    s.target = target.get<ManualComponent>();
  } else {
    s.target = ModelTarget{target.at("descriptor_id").get<std::string>(),
                           target.at("object_index").get<int>(),
                           target.at("state_id").get<std::string>()};
  }
  s.note = j.at("note").get<std::string>();
  const Json& confirmed = j.at("confirmed_screenshot");
  s.confirmed_full_screenshot =
      confirmed.is_null() ? std::nullopt : std::optional(confirmed.get<std::string>());
}

void to_json(Json& j, const ReportSession& s) {
  j = Json{{"session_id", s.session_id},
           {"app_id", s.app_id},
           {"app_version", s.app_version},
           {"reporter_name", s.reporter_name},
           {"device_name", s.device_name},
           {"orientation", enum_name(s.orientation)},
           {"title", s.title},
           {"description", s.description},
           {"steps", s.steps},
           {"hypothesis", s.hypothesis},
           {"finalized", s.finalized},
           {"report_id", s.report_id ? Json(*s.report_id) : Json()},
           {"created_at", s.created_at},
           {"updated_at", s.updated_at}};
}

void from_json(const Json& j, ReportSession& s) {
  s.session_id = j.at("session_id").get<std::string>();
  s.app_id = j.at("app_id").get<std::string>();
  s.app_version = j.at("app_version").get<std::string>();
  s.reporter_name = j.at("reporter_name").get<std::string>();
  s.device_name = j.at("device_name").get<std::string>();
  s.orientation = parse_enum<Orientation>(j.at("orientation"), parse_orientation, "orientation");
  s.title = j.at("title").get<std::string>();
  s.description = j.at("description").get<std::string>();
  s.steps = j.at("steps").get<std::vector<ReproStep>>();
  s.hypothesis = hypothesis_from_json(j.at("hypothesis"));
  s.finalized = j.at("finalized").get<bool>();
  const Json& id = j.at("report_id");
  s.report_id = id.is_null() ? std::nullopt : std::optional(id.get<std::uint64_t>());
  s.created_at = j.at("created_at").get<std::string>();
  s.updated_at = j.at("updated_at").get<std::string>();
}

void to_json(Json& j, const ReportRow& r) {
  j = Json{{"step_index", r.step_index},
           {"action", enum_name(r.action)},
           {"entered_text", r.entered_text},
           {"component_type", enum_name(r.component_type)},
           {"component_text", r.component_text},
           {"relative_location", enum_name(r.relative_location)},
           {"source_unit", r.source_unit},
           {"component_screenshot", r.component_screenshot ? Json(*r.component_screenshot) : Json()},
           {"note", r.note},
           {"manual", r.manual}};
}

void from_json(const Json& j, ReportRow& r) {
  r.step_index = j.at("step_index").get<int>();
  r.action = parse_enum<ActionKind>(j.at("action"), parse_action_kind, "action");
  r.entered_text = j.at("entered_text").get<std::string>();
  r.component_type = parse_enum<ComponentType>(j.at("component_type"), parse_component_type, "component type");
  r.component_text = j.at("component_text").get<std::string>();
  r.relative_location =
      parse_enum<RelativeLocation>(j.at("relative_location"), parse_relative_location, "relative location");
  r.source_unit = j.at("source_unit").get<std::string>();
  const Json& shot = j.at("component_screenshot");
  r.component_screenshot = shot.is_null() ? std::nullopt : std::optional(shot.get<std::string>());
  r.note = j.at("note").get<std::string>();
  r.manual = j.at("manual").get<bool>();
}

void to_json(Json& j, const BugReport& r) {
  j = Json{{"report_id", r.report_id},
           {"app_id", r.app_id},
           {"app_version", r.app_version},
           {"reporter_name", r.reporter_name},
           {"device_name", r.device_name},
           {"orientation", enum_name(r.orientation)},
           {"title", r.title},
           {"description", r.description},
           {"steps", r.steps},
           {"rows", r.rows},
           {"screenshots", r.screenshots}};
}

void from_json(const Json& j, BugReport& r) {
  r.report_id = j.at("report_id").get<std::uint64_t>();
  r.app_id = j.at("app_id").get<std::string>();
  r.app_version = j.at("app_version").get<std::string>();
  r.reporter_name = j.at("reporter_name").get<std::string>();
  r.device_name = j.at("device_name").get<std::string>();
  r.orientation = parse_enum<Orientation>(j.at("orientation"), parse_orientation, "orientation");
  r.title = j.at("title").get<std::string>();
  r.description = j.at("description").get<std::string>();
  r.steps = j.at("steps").get<std::vector<ReproStep>>();
  r.rows = j.at("rows").get<std::vector<ReportRow>>();
  r.screenshots = j.at("screenshots").get<std::vector<std::string>>();
}

}  // namespace fusion
