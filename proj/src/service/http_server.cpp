#include "fusion/service/http_server.hpp"

#include <httplib.h>
#include <sys/socket.h>

#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

#include "fusion/error.hpp"

namespace fusion::service {

int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kValidation:
    case ErrorCode::kRange:
      return 400;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kConflict:
    case ErrorCode::kState:
      return 409;
    case ErrorCode::kEnvironment:
      return 500;
  }
  return 500;
}

namespace {

void send_json(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void send_error(httplib::Response& res, int status, const std::string& code, const std::string& message,
                const std::string& field = {}) {
  Json body = {{"error", code}, {"message", message}};
  if (!field.empty()) body["field"] = field;
  send_json(res, body, status);
}

Json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  try {
    return Json::parse(req.body);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON body: ") + e.what());
  }
}

bool wants_html(const httplib::Request& req) {
  if (req.has_param("format")) {
    const std::string format = req.get_param_value("format");
    if (format == "html") return true;
    if (format == "json") return false;
    throw Error(ErrorCode::kValidation, "format must be html or json", "format");
  }
  const std::string accept = req.get_header_value("Accept");
  return accept.find("text/html") != std::string::npos;
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(ReportService& s) : service(s) {}

  template <typename F>
  httplib::Server::Handler guarded(F handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const Error& e) {
        send_error(res, http_status(e.code()), std::string(to_string(e.code())), e.what(), e.field());
      } catch (const std::exception& e) {
        send_error(res, 500, "internal_error", e.what());
      }
    };
  }

  void routes() {
    server.Get("/apps", guarded([this](const httplib::Request&, httplib::Response& res) {
      send_json(res, service.list_apps());
    }));
    server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, service.create_session(parse_body(req)), 201);
    }));
    server.Get(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, service.get_session(req.matches[1]));
    }));
    server.Get(R"(/sessions/([^/]+)/suggestions)",
               guarded([this](const httplib::Request& req, httplib::Response& res) {
                 send_json(res, service.get_suggestions(req.matches[1], req.get_param_value("action")));
               }));
    server.Post(R"(/sessions/([^/]+)/steps)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send_json(res, service.add_step(req.matches[1], parse_body(req)), 201);
    }));
    server.Post(R"(/sessions/([^/]+)/finalize)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  send_json(res, service.finalize(req.matches[1]), 201);
                }));
    server.Get(R"(/reports/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const Document doc =
          service.get_report(req.matches[1], wants_html(req) ? ReportFormat::kHtml : ReportFormat::kJson);
      res.set_content(doc.body, doc.content_type);
    }));
    server.Get(R"(/shots/([0-9a-f]{64})\.png)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string hash = req.matches[1];
      const std::string etag = "\"" + hash + "\"";
      res.set_header("ETag", etag);
      res.set_header("Cache-Control", "public, max-age=31536000, immutable");
      const Document doc = service.get_screenshot(hash);
      if (req.get_header_value("If-None-Match") == etag) {
        res.status = 304;
        return;
      }
      res.set_content(doc.body, doc.content_type);
    }));
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.status == 404 && res.body.empty()) send_error(res, 404, "not_found", "no such route");
    });
  }

  ReportService& service;
  httplib::Server server;
  int bound_port = -1;
  std::mutex lifecycle;
  bool started = false;
  bool stopping = false;
  std::atomic<bool> returned{false};
};

HttpServer::HttpServer(ReportService& service) : impl_(std::make_unique<Impl>(service)) {
  // httplib defaults to SO_REUSEPORT, which lets a second server share an
  // occupied port silently.
  impl_->server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
  });
  impl_->routes();
}

HttpServer::~HttpServer() { stop(); }

void HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    impl_->bound_port = impl_->server.bind_to_any_port(host);
  } else if (impl_->server.bind_to_port(host, port)) {
    impl_->bound_port = port;
  } else {
    impl_->bound_port = -1;
  }
  if (impl_->bound_port < 0) {
    throw Error(ErrorCode::kEnvironment, "cannot bind " + host + ":" + std::to_string(port));
  }
}

int HttpServer::port() const { return impl_->bound_port; }

void HttpServer::listen() {
  if (impl_->bound_port < 0) throw Error(ErrorCode::kState, "server is not bound");
  {
    std::lock_guard lock(impl_->lifecycle);
    if (impl_->stopping) return;
    impl_->started = true;
  }
  impl_->server.listen_after_bind();
  impl_->returned = true;
}

void HttpServer::stop() {
  if (!impl_) return;
  {
    std::lock_guard lock(impl_->lifecycle);
    impl_->stopping = true;
    if (!impl_->started) return;
  }
  // listen() may not have reached its accept loop yet.
  while (!impl_->server.is_running() && !impl_->returned) {
    std::this_thread::sleep_for(std::chrono::milliseconds(1));
  }
  impl_->server.stop();
}

}  // namespace fusion::service
