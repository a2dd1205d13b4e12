#pragma once

#include <stdexcept>
#include <string>

namespace riskfield {

/// Malformed input document (bad JSON, missing keys, wrong types).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input violating a documented invariant.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// External-provider exchange violation (missing files, bad fields, timeout).
struct ProtocolError : std::runtime_error {
  explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace riskfield
