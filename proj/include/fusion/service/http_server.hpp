#pragma once

#include <memory>
#include <string>

#include "fusion/service/report_service.hpp"

namespace fusion::service {

// JSON/HTML API over a ReportService:
//   GET  /apps
//   POST /sessions                      GET /sessions/{id}
//   GET  /sessions/{id}/suggestions?action=CLICK
//   POST /sessions/{id}/steps           POST /sessions/{id}/finalize
//   GET  /reports/{id}[?format=html|json]
//   GET  /shots/{sha256}.png
// Errors are {"error": code, "message": text, "field"?: name}.
class HttpServer {
 public:
  explicit HttpServer(ReportService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Port 0 picks a free port. Throws Error(kEnvironment) if the address
  // cannot be bound.
  void bind(const std::string& host, int port);
  int port() const;
  // Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

int http_status(ErrorCode code);

}  // namespace fusion::service
