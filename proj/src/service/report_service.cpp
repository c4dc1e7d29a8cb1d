#include "fusion/service/report_service.hpp"

#include <chrono>
#include <ctime>

#include "fusion/error.hpp"
#include "fusion/service/report_builder.hpp"

namespace fusion::service {
namespace {

std::string optional_string(const Json& request, const char* field) {
  auto it = request.find(field);
  if (it == request.end() || it->is_null()) return {};
  if (!it->is_string()) throw Error(ErrorCode::kValidation, std::string(field) + " must be a string", field);
  return it->get<std::string>();
}

std::string required_string(const Json& request, const char* field) {
  auto it = request.find(field);
  if (it == request.end() || !it->is_string()) {
    throw Error(ErrorCode::kValidation, std::string(field) + " is required", field);
  }
  return it->get<std::string>();
}

ActionKind parse_action(const std::string& name, const char* field) {
  if (auto kind = parse_action_kind(name)) return *kind;
  throw Error(ErrorCode::kValidation, "unknown action '" + name + "'", field);
}

Json hypothesis_summary(const StateHypothesis& h) { return Json(h); }

}  // namespace

class ReportService::SessionGuard {
 public:
  SessionGuard(ReportService& service, const std::string& session_id)
      : lock_(service.session_mutex(session_id), std::try_to_lock) {
    if (!lock_.owns_lock()) {
      throw Error(ErrorCode::kConflict, "session " + session_id + " has a request in flight");
    }
  }

 private:
  std::unique_lock<std::mutex> lock_;
};

ReportService::ReportService(ModelStore& store, Clock clock)
    : store_(store), clock_(clock ? std::move(clock) : Clock(&ReportService::utc_now)) {}

std::string ReportService::utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

std::mutex& ReportService::session_mutex(const std::string& session_id) {
  std::lock_guard lock(sessions_mutex_);
  auto& slot = session_locks_[session_id];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

Json ReportService::list_apps() const {
  Json out = Json::array();
  for (const auto& key : store_.list_apps()) {
    out.push_back({{"app_id", key.app_id}, {"version", key.app_version}});
  }
  return out;
}

Json ReportService::create_session(const Json& request) {
  if (!request.is_object()) throw Error(ErrorCode::kValidation, "request body must be an object");
  ReportSession session;
  session.app_id = required_string(request, "app_id");
  session.app_version = request.contains("version") ? required_string(request, "version")
                                                    : required_string(request, "app_version");
  auto model = store_.get_model(session.app_id, session.app_version);

  session.reporter_name = optional_string(request, "reporter_name");
  session.device_name = optional_string(request, "device_name");
  const std::string orientation = optional_string(request, "orientation");
  if (!orientation.empty()) {
    auto parsed = parse_orientation(orientation);
    if (!parsed) throw Error(ErrorCode::kValidation, "orientation must be PORTRAIT or LANDSCAPE", "orientation");
    session.orientation = *parsed;
  }
  session.title = optional_string(request, "title");
  if (session.title.empty()) throw Error(ErrorCode::kValidation, "title must not be empty", "title");
  session.description = optional_string(request, "description");
  session.hypothesis = suggest::initial_hypothesis(*model);
  session.created_at = session.updated_at = clock_();
  session.session_id = store_.next_session_id();
  store_.put_session(session);
  return Json(session);
}

Json ReportService::get_session(const std::string& session_id) const {
  return Json(store_.get_session(session_id));
}

Json to_transport(const suggest::SuggestionSet& set, const StateHypothesis& hypothesis,
                  const ModelView& model) {
  Json entries = Json::array();
  for (const auto& e : set.entries) {
    Json entry = {{"manual", e.is_manual_option},
                  {"type", std::string(to_string(e.display_type))},
                  {"type_label", std::string(display_name(e.display_type))},
                  {"text", e.display_text},
                  {"disambiguator", e.option_number ? Json(e.disambiguator()) : Json()}};
    if (e.target) {
      entry["descriptor_id"] = e.target->descriptor_id;
      entry["object_index"] = e.target->object_index;
      entry["state_id"] = e.target->state_id;
      entry["location"] = std::string(to_string(e.display_location));
      entry["location_label"] = std::string(display_name(e.display_location));
      entry["thumbnail"] = e.thumbnail;
      entry["thumbnail_url"] = "/shots/" + e.thumbnail + ".png";
    } else {
      entry["descriptor_id"] = nullptr;
      entry["object_index"] = nullptr;
      entry["state_id"] = nullptr;
      entry["location"] = nullptr;
      entry["location_label"] = nullptr;
      entry["thumbnail"] = nullptr;
      entry["thumbnail_url"] = nullptr;
    }
    entry["confirmation_screens"] = suggest::confirmation_screens(hypothesis, set.action, e, model);
    entries.push_back(std::move(entry));
  }
  return Json{{"action", std::string(to_string(set.action))},
              {"provenance", std::string(suggest::to_string(set.provenance))},
              {"hypothesis", hypothesis_summary(hypothesis)},
              {"entries", std::move(entries)}};
}

Json ReportService::get_suggestions(const std::string& session_id, const std::string& action) const {
  const ReportSession session = store_.get_session(session_id);
  if (action.empty()) throw Error(ErrorCode::kValidation, "action query parameter is required", "action");
  const ActionKind kind = parse_action(action, "action");
  auto model = store_.get_model(session.app_id, session.app_version);
  return to_transport(suggest::suggest_components(session.hypothesis, kind, *model), session.hypothesis, *model);
}

suggest::StepInput step_input_from_transport(const Json& request) {
  if (!request.is_object()) throw Error(ErrorCode::kValidation, "request body must be an object");
  suggest::StepInput input;
  input.action = parse_action(required_string(request, "action"), "action");

  const bool has_target = request.contains("target") && !request.at("target").is_null();
  const bool has_manual = request.contains("manual") && !request.at("manual").is_null();
  if (has_target == has_manual) {
    throw Error(ErrorCode::kValidation, "exactly one of target or manual is required", "target");
  }
  if (has_target) {
    const Json& t = request.at("target");
    if (!t.is_object() || !t.contains("object_index") || !t.at("object_index").is_number_integer()) {
      throw Error(ErrorCode::kValidation, "target needs descriptor_id, object_index and state_id", "target");
    }
    input.target = ModelTarget{required_string(t, "descriptor_id"), t.at("object_index").get<int>(),
                               required_string(t, "state_id")};
  } else {
    const Json& m = request.at("manual");
    if (!m.is_object()) throw Error(ErrorCode::kValidation, "manual must be an object", "manual");
    ManualComponent manual;
    auto type = parse_component_type(required_string(m, "component_type"));
    if (!type) throw Error(ErrorCode::kValidation, "unknown component type", "manual.component_type");
    manual.component_type = *type;
    manual.text = optional_string(m, "text");
    auto location = parse_relative_location(required_string(m, "relative_location"));
    if (!location) throw Error(ErrorCode::kValidation, "unknown relative location", "manual.relative_location");
    manual.relative_location = *location;
    input.target = manual;
  }
  if (request.contains("entered_text") && !request.at("entered_text").is_null()) {
    input.entered_text = optional_string(request, "entered_text");
  }
  if (request.contains("direction") && !request.at("direction").is_null()) {
    auto direction = parse_swipe_direction(optional_string(request, "direction"));
    if (!direction) throw Error(ErrorCode::kValidation, "unknown swipe direction", "direction");
    input.direction = *direction;
  }
  input.note = optional_string(request, "note");
  const std::string confirmed = optional_string(request, "confirmed_screenshot");
  if (!confirmed.empty()) input.confirmed_screenshot = confirmed;
  return input;
}

Json ReportService::add_step(const std::string& session_id, const Json& request) {
  SessionGuard guard(*this, session_id);
  ReportSession session = store_.get_session(session_id);
  if (session.finalized) throw Error(ErrorCode::kState, "session " + session_id + " is already finalized");
  const suggest::StepInput input = step_input_from_transport(request);
  auto model = store_.get_model(session.app_id, session.app_version);
  session = suggest::record_step(std::move(session), input, *model);
  session.updated_at = clock_();
  store_.put_session(session);
  return Json{{"session_id", session.session_id},
              {"steps", session.steps},
              {"hypothesis", hypothesis_summary(session.hypothesis)}};
}

Json ReportService::finalize(const std::string& session_id) {
  SessionGuard guard(*this, session_id);
  ReportSession session = store_.get_session(session_id);
  if (session.finalized) throw Error(ErrorCode::kState, "session " + session_id + " is already finalized");
  if (session.steps.empty()) {
    throw Error(ErrorCode::kValidation, "a report needs at least one step", "steps");
  }
  auto model = store_.get_model(session.app_id, session.app_version);
  // Built before an id is taken so a bad session does not burn one.
  BugReport report = build_report(session, *model, 1);
  report.report_id = store_.next_report_id();
  store_.put_report(report);
  session.finalized = true;
  session.report_id = report.report_id;
  session.updated_at = clock_();
  store_.put_session(session);
  return Json{{"report_id", report.report_id}, {"session_id", session.session_id}};
}

Document ReportService::get_report(const std::string& report_id, ReportFormat format) const {
  std::uint64_t id = 0;
  try {
    std::size_t used = 0;
    id = std::stoull(report_id, &used);
    if (used != report_id.size()) throw std::invalid_argument(report_id);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kNotFound, "unknown report '" + report_id + "'");
  }
  if (format == ReportFormat::kHtml) {
    return {"text/html; charset=utf-8", render_html(store_.get_report(id))};
  }
  return {"application/json", store_.get_report_document(id)};
}

Document ReportService::get_screenshot(const std::string& hash) const {
  return {"image/png", store_.get_screenshot(hash)};
}

}  // namespace fusion::service
