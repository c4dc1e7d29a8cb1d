#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace fusion::analysis {

// Reads every regular entry of a zip archive (stored or deflated) into
// memory. Throws Error(kParse) on a malformed archive, or on CRC mismatch.
std::map<std::string, std::string> read_zip(const std::string& archive_bytes,
                                            const std::string& archive_name = "archive");
std::map<std::string, std::string> read_zip_file(const std::filesystem::path& path);

}  // namespace fusion::analysis
