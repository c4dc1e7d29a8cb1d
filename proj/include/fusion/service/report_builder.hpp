#pragma once

#include <cstdint>
#include <string>

#include "fusion/store/model_view.hpp"
#include "fusion/types.hpp"

namespace fusion::service {

// Freezes a session into a report: one row per step (action, component
// type, relative location, source unit, component crop) and the ordered
// trail of full screenshots (confirmed screen, else the step's state;
// manual steps contribute none).
BugReport build_report(const ReportSession& session, const ModelView& model, std::uint64_t report_id);

// Developer view with three sections in order: report-preliminary,
// report-steps, report-screenshots. Images point at /shots/<hash>.png.
std::string render_html(const BugReport& report);

std::string html_escape(std::string_view text);

}  // namespace fusion::service
