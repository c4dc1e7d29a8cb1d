#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "fusion/store/model_store.hpp"
#include "fusion/store/serialize.hpp"
#include "fusion/suggest/engine.hpp"

namespace fusion::service {

enum class ReportFormat { kJson, kHtml };

struct Document {
  std::string content_type;
  std::string body;
};

// Transport-level operations behind the HTTP API. Requests and responses
// are JSON values; failures are thrown as fusion::Error.
class ReportService {
 public:
  using Clock = std::function<std::string()>;

  explicit ReportService(ModelStore& store, Clock clock = {});

  Json list_apps() const;
  Json create_session(const Json& request);
  Json get_session(const std::string& session_id) const;
  Json get_suggestions(const std::string& session_id, const std::string& action) const;
  Json add_step(const std::string& session_id, const Json& request);
  Json finalize(const std::string& session_id);
  Document get_report(const std::string& report_id, ReportFormat format) const;
  Document get_screenshot(const std::string& hash) const;

  // UTC, second resolution, e.g. 2026-01-31T12:00:00Z.
  static std::string utc_now();

 private:
  // Exclusive hold on one session; a second concurrent writer gets
  // Error(kConflict) instead of waiting.
  class SessionGuard;

  std::mutex& session_mutex(const std::string& session_id);

  ModelStore& store_;
  Clock clock_;
  std::mutex sessions_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> session_locks_;
};

Json to_transport(const suggest::SuggestionSet& set, const StateHypothesis& hypothesis,
                  const ModelView& model);
suggest::StepInput step_input_from_transport(const Json& request);

}  // namespace fusion::service
