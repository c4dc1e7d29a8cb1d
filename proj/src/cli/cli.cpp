#include "fusion/cli/cli.hpp"

#include <CLI11.hpp>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <thread>

#include "fusion/analysis/package.hpp"
#include "fusion/analysis/universe.hpp"
#include "fusion/dynamic/behavior.hpp"
#include "fusion/dynamic/simulator.hpp"
#include "fusion/error.hpp"
#include "fusion/service/http_server.hpp"
#include "fusion/service/report_service.hpp"
#include "fusion/store/serialize.hpp"

namespace fusion::cli {

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kValidation:
    case ErrorCode::kRange:
      return kExitParse;
    case ErrorCode::kConflict:
      return kExitConflict;
    case ErrorCode::kNotFound:
      return kExitNotFound;
    case ErrorCode::kEnvironment:
      return kExitEnvironment;
    case ErrorCode::kState:
      return kExitFailure;
  }
  return kExitFailure;
}

IngestSummary ingest(ModelStore& store, const std::filesystem::path& package_path) {
  const analysis::AppPackage package = analysis::load_package(package_path);
  // Reject a broken behavior model now rather than at rip time.
  if (package.behavior_json) dynamic::parse_behavior(*package.behavior_json);
  analysis::UniverseBuild build = analysis::analyze_package(package);
  store.put_universe(build.universe, package.behavior_json);
  return {build.universe.app_id, build.universe.app_version, build.universe.descriptors.size(),
          std::move(build.warnings)};
}

RipSummary rip(ModelStore& store, const std::string& app_id, const std::string& version,
               const dynamic::RipLimits& limits) {
  const ComponentUniverse universe = store.get_universe(app_id, version);
  const auto behavior = store.get_behavior(app_id, version);
  if (!behavior) {
    throw Error(ErrorCode::kNotFound, app_id + " " + version + " has no behavior model to drive");
  }
  dynamic::ScriptedAppDriver driver(dynamic::parse_behavior(*behavior));
  dynamic::RipResult result = dynamic::rip(driver, universe, limits);
  for (const auto& [hash, png] : result.screenshots) store.put_screenshot(png);
  store.put_graph(app_id, version, result.graph);
  return {result.graph.states.size(), result.graph.transitions.size(), result.graph.truncated,
          result.actions_performed, result.screenshots.size()};
}

namespace {

std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value && *value ? value : fallback;
}

std::pair<std::string, int> split_addr(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::kValidation, "address must be host:port", "addr");
  const std::string host = addr.substr(0, colon);
  int port = -1;
  try {
    std::size_t used = 0;
    port = std::stoi(addr.substr(colon + 1), &used);
    if (used != addr.size() - colon - 1) port = -1;
  } catch (const std::exception&) {
  }
  if (host.empty() || port < 0 || port > 65535) {
    throw Error(ErrorCode::kValidation, "address must be host:port", "addr");
  }
  return {host, port};
}

void require_store(const std::string& store) {
  if (store.empty()) throw Error(ErrorCode::kValidation, "--store (or FUSION_STORE) is required", "store");
}

int serve(const std::string& store_root, const std::string& addr, std::ostream& out) {
  const auto [host, port] = split_addr(addr);
  ModelStore store(store_root);
  service::ReportService reports(store);
  service::HttpServer server(reports);
  server.bind(host, port);

  // Route SIGINT/SIGTERM to a waiting thread; the server threads inherit the mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  out << "listening on " << host << ":" << server.port() << std::endl;
  std::thread listener([&server] { server.listen(); });
  int received = 0;
  sigwait(&signals, &received);
  server.stop();
  listener.join();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bug-report capture backed by static and dynamic app models", "fusion"};
  app.require_subcommand(1);

  std::string store_root = env_or("FUSION_STORE", "");
  bool json = false;

  auto* ingest_cmd = app.add_subcommand("ingest", "Analyze an app package and store its component universe");
  std::string package_path;
  ingest_cmd->add_option("package", package_path, "Package directory or .zip")->required();
  ingest_cmd->add_option("--store", store_root, "Store root (env FUSION_STORE)");
  ingest_cmd->add_flag("--json", json, "Machine-readable summary");

  auto* rip_cmd = app.add_subcommand("rip", "Explore an ingested app and store its event-flow graph");
  std::string app_id;
  std::string version;
  dynamic::RipLimits limits;
  rip_cmd->add_option("app_id", app_id)->required();
  rip_cmd->add_option("version", version)->required();
  rip_cmd->add_option("--store", store_root, "Store root (env FUSION_STORE)");
  rip_cmd->add_option("--max-states", limits.max_states)->check(CLI::PositiveNumber);
  rip_cmd->add_option("--max-actions", limits.max_actions)->check(CLI::PositiveNumber);
  rip_cmd->add_flag("--json", json, "Machine-readable summary");

  auto* serve_cmd = app.add_subcommand("serve", "Run the report HTTP API");
  std::string addr = env_or("FUSION_ADDR", "127.0.0.1:8080");
  serve_cmd->add_option("--store", store_root, "Store root (env FUSION_STORE)");
  serve_cmd->add_option("--addr", addr, "host:port (env FUSION_ADDR)");

  auto* export_cmd = app.add_subcommand("export", "Write a stored report as HTML or JSON");
  std::string report_id;
  std::string format = "json";
  std::string out_path;
  export_cmd->add_option("report_id", report_id)->required();
  export_cmd->add_option("--store", store_root, "Store root (env FUSION_STORE)");
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"html", "json"}));
  export_cmd->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    require_store(store_root);
    if (*ingest_cmd) {
      ModelStore store(store_root);
      const IngestSummary s = ingest(store, package_path);
      for (const auto& w : s.warnings) err << "warning: " << w << "\n";
      if (json) {
        out << Json{{"app_id", s.app_id}, {"version", s.app_version}, {"descriptors", s.descriptors},
                    {"warnings", s.warnings}}.dump()
            << "\n";
      } else {
        out << s.app_id << " " << s.app_version << " descriptors=" << s.descriptors << "\n";
      }
    } else if (*rip_cmd) {
      ModelStore store(store_root);
      const RipSummary s = rip(store, app_id, version, limits);
      if (json) {
        out << Json{{"states", s.states}, {"transitions", s.transitions}, {"truncated", s.truncated},
                    {"actions", s.actions}, {"screenshots", s.screenshots}}.dump()
            << "\n";
      } else {
        out << "states=" << s.states << " transitions=" << s.transitions
            << " truncated=" << (s.truncated ? "true" : "false") << "\n";
      }
    } else if (*serve_cmd) {
      return serve(store_root, addr, out);
    } else if (*export_cmd) {
      ModelStore store(store_root);
      service::ReportService reports(store);
      const service::Document doc = reports.get_report(
          report_id, format == "html" ? service::ReportFormat::kHtml : service::ReportFormat::kJson);
      if (out_path.empty()) {
        out << doc.body;
      } else {
        std::ofstream file(out_path, std::ios::binary);
        file << doc.body;
        if (!file.flush()) throw Error(ErrorCode::kEnvironment, "cannot write " + out_path);
      }
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace fusion::cli
