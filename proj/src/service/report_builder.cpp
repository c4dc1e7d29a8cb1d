#include "fusion/service/report_builder.hpp"

#include <sstream>

#include "fusion/error.hpp"

namespace fusion::service {
namespace {

std::string shot_url(const ShotRef& hash) { return "/shots/" + hash + ".png"; }

std::string action_label(const ReproStep& step) {
  std::string label(display_name(step.action.kind()));
  if (step.action.text() && !step.action.text()->empty()) label += " \"" + *step.action.text() + "\"";
  if (step.action.direction()) label += " " + std::string(to_string(*step.action.direction()));
  return label;
}

}  // namespace

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

BugReport build_report(const ReportSession& session, const ModelView& model, std::uint64_t report_id) {
  BugReport report;
  report.report_id = report_id;
  report.app_id = session.app_id;
  report.app_version = session.app_version;
  report.reporter_name = session.reporter_name;
  report.device_name = session.device_name;
  report.orientation = session.orientation;
  report.title = session.title;
  report.description = session.description;
  report.steps = session.steps;

  for (const auto& step : session.steps) {
    ReportRow row;
    row.step_index = step.step_index;
    row.action = step.action.kind();
    row.entered_text = step.action.text().value_or("");
    row.note = step.note;
    if (const auto* manual = std::get_if<ManualComponent>(&step.target)) {
      row.manual = true;
      row.component_type = manual->component_type;
      row.component_text = manual->text;
      row.relative_location = manual->relative_location;
    } else {
      const auto& target = std::get<ModelTarget>(step.target);
      const ScreenState& state = model.state(target.state_id);
      const ComponentInstance* instance = state.find(target.ref());
      const ComponentDescriptor* d = model.descriptor(target.descriptor_id);
      if (!instance || !d) {
        throw Error(ErrorCode::kValidation,
                    "step " + std::to_string(step.step_index) + " references a component missing from the model");
      }
      row.component_type = d->component_type;
      row.component_text = instance->runtime_text.empty() ? d->default_text : instance->runtime_text;
      row.relative_location = relative_location(instance->bounds, state.screen_dims);
      row.source_unit = model.source_unit_for(target.state_id, target.descriptor_id);
      row.component_screenshot = instance->component_screenshot;
      report.screenshots.push_back(step.confirmed_full_screenshot.value_or(state.full_screenshot));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string render_html(const BugReport& report) {
  std::ostringstream out;
  const std::string id = std::to_string(report.report_id);
  out << "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n"
      << "<title>Bug report #" << id << ": " << html_escape(report.title) << "</title>\n"
      << "</head>\n<body>\n<header><h1>Bug report #<span data-field=\"report-id\">" << id
      << "</span></h1></header>\n";

  out << "<section id=\"report-preliminary\" class=\"report-section\">\n<h2>Report details</h2>\n<dl>\n"
      << "<dt>Title</dt><dd data-field=\"title\">" << html_escape(report.title) << "</dd>\n"
      << "<dt>App</dt><dd data-field=\"app\">" << html_escape(report.app_id) << " "
      << html_escape(report.app_version) << "</dd>\n"
      << "<dt>Device</dt><dd data-field=\"device\">" << html_escape(report.device_name) << "</dd>\n"
      << "<dt>Orientation</dt><dd data-field=\"orientation\">"
      << (report.orientation == Orientation::kLandscape ? "landscape" : "portrait") << "</dd>\n"
      << "<dt>Reporter</dt><dd data-field=\"reporter\">" << html_escape(report.reporter_name) << "</dd>\n"
      << "<dt>Description</dt><dd data-field=\"description\">" << html_escape(report.description)
      << "</dd>\n</dl>\n</section>\n";

  out << "<section id=\"report-steps\" class=\"report-section\">\n<h2>Steps to reproduce</h2>\n<table>\n"
      << "<thead><tr><th>#</th><th>Action</th><th>Component type</th><th>Component text</th>"
         "<th>Relative location</th><th>Source unit</th><th>Component screenshot</th><th>Notes</th></tr></thead>\n"
      << "<tbody>\n";
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const ReportRow& row = report.rows[i];
    out << "<tr class=\"step\" data-step=\"" << row.step_index << "\">"
        << "<td data-field=\"step\">" << row.step_index << "</td>"
        << "<td data-field=\"action\">" << html_escape(action_label(report.steps[i])) << "</td>"
        << "<td data-field=\"component-type\">" << display_name(row.component_type)
        << (row.manual ? " (entered manually)" : "") << "</td>"
        << "<td data-field=\"component-text\">" << html_escape(row.component_text) << "</td>"
        << "<td data-field=\"relative-location\">" << display_name(row.relative_location) << "</td>"
        << "<td data-field=\"source-unit\">" << html_escape(row.source_unit) << "</td>"
        << "<td data-field=\"component-screenshot\">";
    if (row.component_screenshot) {
      out << "<img src=\"" << shot_url(*row.component_screenshot) << "\" alt=\"step " << row.step_index
          << " component\">";
    } else {
      out << "n/a";
    }
    out << "</td><td data-field=\"note\">" << html_escape(row.note) << "</td></tr>\n";
  }
  out << "</tbody>\n</table>\n</section>\n";

  out << "<section id=\"report-screenshots\" class=\"report-section\">\n<h2>Screenshots</h2>\n<ol>\n";
  std::size_t shot = 0;
  for (const auto& row : report.rows) {
    if (row.manual || shot >= report.screenshots.size()) continue;
    out << "<li><figure><img src=\"" << shot_url(report.screenshots[shot++]) << "\" alt=\"screen for step "
        << row.step_index << "\"><figcaption>Step " << row.step_index << "</figcaption></figure></li>\n";
  }
  out << "</ol>\n</section>\n</body>\n</html>\n";
  return out.str();
}

}  // namespace fusion::service
