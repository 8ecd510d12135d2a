#pragma once

#include <stdexcept>
#include <string>

namespace specrev {

enum class errc {
  unreachable_state,
  dangling_edge,
  empty_initial_set,
  unknown_state,
  duplicate_transition,
  missing_preference,
  invalid_removal,
  unreached_node,
  resample_limit_exceeded,
  parse_error,
  config_error,
  invalid_structure,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::unreachable_state: return "UnreachableState";
    case errc::dangling_edge: return "DanglingEdge";
    case errc::empty_initial_set: return "EmptyInitialSet";
    case errc::unknown_state: return "UnknownState";
    case errc::duplicate_transition: return "DuplicateTransition";
    case errc::missing_preference: return "MissingPreference";
    case errc::invalid_removal: return "InvalidRemoval";
    case errc::unreached_node: return "Unreached";
    case errc::resample_limit_exceeded: return "ResampleLimitExceeded";
    case errc::parse_error: return "ParseError";
    case errc::config_error: return "ConfigError";
    case errc::invalid_structure: return "InvalidStructure";
  }
  return "Error";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace specrev
