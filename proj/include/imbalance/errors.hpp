#pragma once

#include <stdexcept>
#include <string>

namespace imb {

// Base class for all toolkit errors; the CLI maps these to exit code 1
// (ParseError and usage problems map to exit code 2).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value outside the sampled/evaluable range of an empirical model.
struct RangeError : Error {
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (x <= 0, ...).
struct DomainError : Error {
  using Error::Error;
};

// Workload size not a multiple of the model granularity.
struct AlignmentError : Error {
  using Error::Error;
};

// Speed functions with mismatched grids or units cannot be combined.
struct IncompatibleModelError : Error {
  using Error::Error;
};

// Too few samples for the requested analysis.
struct InsufficientDataError : Error {
  using Error::Error;
};

// No share assignment satisfies the problem constraints.
struct InfeasibleError : Error {
  using Error::Error;
};

// Search space above the configured cap.
struct TooLargeError : Error {
  using Error::Error;
};

// Bad runtime configuration (thread budget, malformed ranges, ...).
struct ConfigError : Error {
  using Error::Error;
};

// API contract violation (unfilled halo, empty share list, ...).
struct ContractError : Error {
  using Error::Error;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
  int line;
};

}  // namespace imb
