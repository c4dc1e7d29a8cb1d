#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fusion {

// Categories map one-to-one onto CLI exit codes and HTTP statuses.
enum class ErrorCode {
  kParse,        // malformed input files
  kValidation,   // well-formed but violates a contract
  kConflict,     // append-only rule or concurrent mutation
  kNotFound,
  kState,        // lifecycle violation (e.g. finalized session)
  kRange,        // geometry outside the screen
  kEnvironment,  // I/O, sockets, missing tooling
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string field = {})
      : std::runtime_error(message), code_(code), field_(std::move(field)) {}

  ErrorCode code() const { return code_; }
  // Name of the offending request/document field, if any.
  const std::string& field() const { return field_; }

 private:
  ErrorCode code_;
  std::string field_;
};

// Parse failure with a source location; line/column are 1-based, 0 if unknown.
class ParseError : public Error {
 public:
  ParseError(std::string file, int line, int column, const std::string& what)
      : Error(ErrorCode::kParse, format(file, line, column, what)),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& file, int line, int column,
                            const std::string& what) {
    std::string out = file;
    if (line > 0) out += ":" + std::to_string(line) + ":" + std::to_string(column);
    return out + ": " + what;
  }

  std::string file_;
  int line_;
  int column_;
};

}  // namespace fusion
