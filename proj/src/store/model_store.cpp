#include "fusion/store/model_store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fusion/error.hpp"
#include "fusion/graph_validation.hpp"
#include "fusion/store/hash.hpp"
#include "fusion/store/serialize.hpp"

namespace fusion {
namespace fs = std::filesystem;
namespace {

[[noreturn]] void io_failure(const std::string& what, const fs::path& path) {
  throw Error(ErrorCode::kEnvironment, what + " " + path.string() + ": " + std::strerror(errno));
}

// Ids become path components; anything that could escape the tree is
// simply not a known id.
bool safe_segment(const std::string& s) {
  return !s.empty() && s != "." && s != ".." && s.find('/') == std::string::npos &&
         s.find('\\') == std::string::npos && s.find('\0') == std::string::npos;
}

void require_segment(const std::string& s, const char* what) {
  if (!safe_segment(s)) throw Error(ErrorCode::kNotFound, std::string("unknown ") + what + " '" + s + "'");
}

std::optional<std::string> read_optional(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_atomic(const fs::path& path, const std::string& bytes) {
  static std::atomic<unsigned> sequence{0};
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(sequence++);
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC, 0644);
  if (fd < 0) io_failure("cannot create", tmp);
  std::size_t written = 0;
  while (written < bytes.size()) {
    const ssize_t n = ::write(fd, bytes.data() + written, bytes.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      ::close(fd);
      io_failure("cannot write", tmp);
    }
    written += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) io_failure("cannot flush", tmp);
  if (::rename(tmp.c_str(), path.c_str()) != 0) io_failure("cannot rename onto", path);
}

}  // namespace

class ModelStore::WriteLock {
 public:
  explicit WriteLock(ModelStore& store) : guard_(store.write_mutex_) {
    const fs::path path = store.root_ / "meta" / "lock";
    fd_ = ::open(path.c_str(), O_RDWR | O_CREAT, 0644);
    if (fd_ < 0) io_failure("cannot open", path);
    while (::flock(fd_, LOCK_EX) != 0) {
      if (errno != EINTR) {
        ::close(fd_);
        io_failure("cannot lock", path);
      }
    }
  }
  ~WriteLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  WriteLock(const WriteLock&) = delete;
  WriteLock& operator=(const WriteLock&) = delete;

 private:
  std::lock_guard<std::mutex> guard_;
  int fd_ = -1;
};

ModelStore::ModelStore(fs::path root) : root_(std::move(root)) {
  std::error_code ec;
  for (const char* dir : {"apps", "shots", "reports", "sessions", "meta"}) {
    fs::create_directories(root_ / dir, ec);
    if (ec) throw Error(ErrorCode::kEnvironment, "cannot create store at " + root_.string() + ": " + ec.message());
  }
}

fs::path ModelStore::version_dir(const std::string& app_id, const std::string& version) const {
  require_segment(app_id, "app");
  require_segment(version, "version");
  return root_ / "apps" / app_id / version;
}

void ModelStore::put_universe(const ComponentUniverse& universe,
                              const std::optional<std::string>& behavior_json) {
  const fs::path dir = version_dir(universe.app_id, universe.app_version);
  WriteLock lock(*this);
  if (fs::exists(dir / "universe.json")) {
    throw Error(ErrorCode::kConflict,
                "version " + universe.app_version + " of " + universe.app_id + " already ingested");
  }
  fs::create_directories(dir);
  if (behavior_json) write_atomic(dir / "behavior.json", *behavior_json);
  write_atomic(dir / "universe.json", to_canonical(universe));
}

void ModelStore::put_graph(const std::string& app_id, const std::string& version,
                           const EventFlowGraph& graph) {
  const fs::path dir = version_dir(app_id, version);
  const ComponentUniverse universe = get_universe(app_id, version);
  validate_graph(graph, make_lookup(universe, graph));
  require_screenshots(graph);
  WriteLock lock(*this);
  if (fs::exists(dir / "graph.json")) {
    throw Error(ErrorCode::kConflict, "version " + version + " of " + app_id + " already has a graph");
  }
  write_atomic(dir / "graph.json", to_canonical(graph));
}

void ModelStore::put_model(const std::string& app_id, const std::string& version,
                           const ComponentUniverse& universe, const EventFlowGraph& graph) {
  if (universe.app_id != app_id || universe.app_version != version) {
    throw Error(ErrorCode::kValidation, "universe does not belong to " + app_id + " " + version);
  }
  validate_graph(graph, make_lookup(universe, graph));
  require_screenshots(graph);
  const fs::path dir = version_dir(app_id, version);
  WriteLock lock(*this);
  if (fs::exists(dir / "universe.json") || fs::exists(dir / "graph.json")) {
    throw Error(ErrorCode::kConflict, "version " + version + " of " + app_id + " already stored");
  }
  fs::create_directories(dir);
  write_atomic(dir / "universe.json", to_canonical(universe));
  write_atomic(dir / "graph.json", to_canonical(graph));
}

void ModelStore::require_screenshots(const EventFlowGraph& graph) const {
  auto check = [this](const ShotRef& hash) {
    if (!has_screenshot(hash)) throw Error(ErrorCode::kValidation, "graph references missing screenshot " + hash);
  };
  for (const auto& s : graph.states) {
    check(s.full_screenshot);
    for (const auto& i : s.instances) check(i.component_screenshot);
  }
  for (const auto& t : graph.transitions) {
    check(t.before_screenshot);
    check(t.after_screenshot);
  }
}

ShotRef ModelStore::put_screenshot(const std::string& png_bytes) {
  ShotRef hash = sha256_hex(png_bytes);
  const fs::path path = root_ / "shots" / (hash + ".png");
  if (fs::exists(path)) return hash;
  WriteLock lock(*this);
  if (!fs::exists(path)) write_atomic(path, png_bytes);
  return hash;
}

bool ModelStore::has_screenshot(const std::string& hash) const {
  return is_sha256_hex(hash) && fs::exists(root_ / "shots" / (hash + ".png"));
}

std::string ModelStore::get_screenshot(const std::string& hash) const {
  if (!is_sha256_hex(hash)) throw Error(ErrorCode::kNotFound, "unknown screenshot '" + hash + "'");
  auto bytes = read_optional(root_ / "shots" / (hash + ".png"));
  if (!bytes) throw Error(ErrorCode::kNotFound, "unknown screenshot " + hash);
  return *bytes;
}

std::set<ShotRef> ModelStore::screenshot_hashes() const {
  std::set<ShotRef> out;
  for (const auto& entry : fs::directory_iterator(root_ / "shots")) {
    const std::string name = entry.path().filename().string();
    if (name.size() == 68 && name.ends_with(".png")) out.insert(name.substr(0, 64));
  }
  return out;
}

std::vector<AppKey> ModelStore::list_apps() const {
  std::vector<AppKey> out;
  for (const auto& app : fs::directory_iterator(root_ / "apps")) {
    if (!app.is_directory()) continue;
    for (const auto& version : fs::directory_iterator(app.path())) {
      if (fs::exists(version.path() / "universe.json")) {
        out.push_back({app.path().filename().string(), version.path().filename().string()});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ModelStore::has_universe(const std::string& app_id, const std::string& version) const {
  if (!safe_segment(app_id) || !safe_segment(version)) return false;
  return fs::exists(version_dir(app_id, version) / "universe.json");
}

ComponentUniverse ModelStore::get_universe(const std::string& app_id, const std::string& version) const {
  const fs::path path = version_dir(app_id, version) / "universe.json";
  auto text = read_optional(path);
  if (!text) throw Error(ErrorCode::kNotFound, "unknown app " + app_id + " " + version);
  return from_document<ComponentUniverse>(*text, path.string());
}

std::optional<std::string> ModelStore::get_behavior(const std::string& app_id,
                                                    const std::string& version) const {
  return read_optional(version_dir(app_id, version) / "behavior.json");
}

std::shared_ptr<const ModelView> ModelStore::get_model(const std::string& app_id,
                                                       const std::string& version) const {
  const AppKey key{app_id, version};
  {
    std::shared_lock lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  ComponentUniverse universe = get_universe(app_id, version);
  const fs::path graph_path = version_dir(app_id, version) / "graph.json";
  auto text = read_optional(graph_path);
  if (!text) throw Error(ErrorCode::kNotFound, "no event-flow graph for " + app_id + " " + version);
  auto view = std::make_shared<const ModelView>(std::move(universe),
                                                from_document<EventFlowGraph>(*text, graph_path.string()));
  std::unique_lock lock(cache_mutex_);
  return cache_.emplace(key, std::move(view)).first->second;
}

std::vector<ComponentInstance> ModelStore::components_for_state(const std::string& app_id,
                                                                const std::string& version,
                                                                const std::string& state_id,
                                                                ActionKind action) const {
  return get_model(app_id, version)->components_for_state(state_id, action);
}

std::vector<std::pair<std::string, ComponentInstance>> ModelStore::all_components(
    const std::string& app_id, const std::string& version, ActionKind action) const {
  return get_model(app_id, version)->all_components(action);
}

std::set<std::string> ModelStore::transitions_from(const std::string& app_id, const std::string& version,
                                                   const std::string& state_id, ActionKind action,
                                                   const InstanceRef& target) const {
  return get_model(app_id, version)->transitions_from(state_id, action, target);
}

std::uint64_t ModelStore::bump_counter(const std::string& name) {
  WriteLock lock(*this);
  const fs::path path = root_ / "meta" / name;
  std::uint64_t last = 0;
  if (auto text = read_optional(path)) {
    try {
      last = std::stoull(*text);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "corrupt counter file " + path.string());
    }
  }
  write_atomic(path, std::to_string(last + 1));
  return last + 1;
}

std::uint64_t ModelStore::next_report_id() { return bump_counter("counter"); }

std::string ModelStore::next_session_id() {
  return "session-" + std::to_string(bump_counter("session_counter"));
}

void ModelStore::put_report(const BugReport& report) {
  if (report.report_id == 0) throw Error(ErrorCode::kValidation, "report id must be assigned");
  auto check = [this](const ShotRef& hash) {
    if (!has_screenshot(hash)) {
      throw Error(ErrorCode::kValidation, "report references missing screenshot " + hash);
    }
  };
  for (const auto& row : report.rows) {
    if (row.component_screenshot) check(*row.component_screenshot);
  }
  for (const auto& shot : report.screenshots) check(shot);

  const fs::path path = root_ / "reports" / (std::to_string(report.report_id) + ".json");
  WriteLock lock(*this);
  if (fs::exists(path)) {
    throw Error(ErrorCode::kConflict, "report " + std::to_string(report.report_id) + " already exists");
  }
  write_atomic(path, to_canonical(report));
}

std::string ModelStore::get_report_document(std::uint64_t report_id) const {
  auto text = read_optional(root_ / "reports" / (std::to_string(report_id) + ".json"));
  if (!text) throw Error(ErrorCode::kNotFound, "unknown report " + std::to_string(report_id));
  return *text;
}

BugReport ModelStore::get_report(std::uint64_t report_id) const {
  return from_document<BugReport>(get_report_document(report_id), "report " + std::to_string(report_id));
}

void ModelStore::put_session(const ReportSession& session) {
  require_segment(session.session_id, "session");
  WriteLock lock(*this);
  write_atomic(root_ / "sessions" / (session.session_id + ".json"), to_canonical(session));
}

ReportSession ModelStore::get_session(const std::string& session_id) const {
  require_segment(session_id, "session");
  auto text = read_optional(root_ / "sessions" / (session_id + ".json"));
  if (!text) throw Error(ErrorCode::kNotFound, "unknown session '" + session_id + "'");
  return from_document<ReportSession>(*text, "session " + session_id);
}

}  // namespace fusion
