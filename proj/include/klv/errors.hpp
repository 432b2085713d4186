#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace klv {

/// Thrown when a requested enumeration exceeds the configured size cap.
class SizeError : public std::runtime_error {
 public:
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal invariant of the engine fails.  detail() carries a
/// JSON document describing the failing check well enough to reproduce it.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what, std::string detail_json = "{}")
      : std::runtime_error(what), detail_(std::move(detail_json)) {}
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
};

}  // namespace klv
