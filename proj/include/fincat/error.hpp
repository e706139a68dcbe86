// Error types shared across the library.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fincat {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files; message carries "file:line:".
struct ParseError : Error {
  using Error::Error;
};

// Data violating a structural invariant (missing map entries, dangling
// identifiers, non-total composition tables).
struct StructuralError : Error {
  using Error::Error;
};

// A caller-side contract violation, with a witness where available.
struct PreconditionError : Error {
  using Error::Error;
};

// Free category requested on a graph with a directed cycle.
struct AcyclicityError : Error {
  AcyclicityError(std::string msg, std::vector<std::string> witness)
      : Error(std::move(msg)), cycle(std::move(witness)) {}
  std::vector<std::string> cycle;  // edge names of one directed cycle
};

// A bounded computation could not settle and the caller required a verdict.
struct UndecidedError : Error {
  UndecidedError(std::string msg, std::size_t at_bound)
      : Error(std::move(msg)), bound(at_bound) {}
  std::size_t bound;
};

// Brute-force enumeration would exceed the configured cap.
struct SearchSpaceError : Error {
  SearchSpaceError(std::string msg, std::uint64_t size)
      : Error(std::move(msg)), cardinality(size) {}
  std::uint64_t cardinality;  // saturated at UINT64_MAX
};

}  // namespace fincat
