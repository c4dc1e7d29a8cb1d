#pragma once

#include <string>
#include <string_view>

namespace fusion {

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view bytes);

bool is_sha256_hex(std::string_view text);

}  // namespace fusion
