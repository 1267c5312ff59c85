#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace concord {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input stream; carries the 1-based line number.
struct ParseError : Error {
  ParseError(std::size_t line_no, const std::string& what)
      : Error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  std::size_t line;
};

/// Structurally inconsistent corpus (dangling reply_to, bad indices, ...).
struct StructureError : Error {
  using Error::Error;
};

/// Missing or unusable resource/configuration (paths, thresholds, formats).
struct ConfigError : Error {
  using Error::Error;
};

/// Semantically invalid data fed to an operation.
struct DataError : Error {
  using Error::Error;
};

/// Invalid direct operation input (empty sequence, non-finite value).
struct InputError : Error {
  using Error::Error;
};

/// Optimization failure (divergence, non-finite objective).
struct TrainingError : Error {
  using Error::Error;
};

}  // namespace concord
