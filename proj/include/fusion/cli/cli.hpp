#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fusion/dynamic/ripper.hpp"
#include "fusion/error.hpp"
#include "fusion/store/model_store.hpp"

namespace fusion::cli {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitConflict = 3;
inline constexpr int kExitNotFound = 4;
inline constexpr int kExitEnvironment = 5;

int exit_code(ErrorCode code);

struct IngestSummary {
  std::string app_id;
  std::string app_version;
  std::size_t descriptors = 0;
  std::vector<std::string> warnings;
};

struct RipSummary {
  std::size_t states = 0;
  std::size_t transitions = 0;
  bool truncated = false;
  std::size_t actions = 0;
  std::size_t screenshots = 0;
};

// Static analysis of a package into the store (universe + behavior model).
IngestSummary ingest(ModelStore& store, const std::filesystem::path& package);

// Rips an ingested version with the scripted driver and stores the graph.
// Error(kNotFound) if the version or its behavior model is missing.
RipSummary rip(ModelStore& store, const std::string& app_id, const std::string& version,
               const dynamic::RipLimits& limits);

// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fusion::cli
