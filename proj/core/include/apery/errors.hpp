#pragma once

#include <stdexcept>
#include <string>

namespace apery {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter lies outside the domain of the requested identity or function.
// The message names the violated constraint.
class DomainViolation : public Error {
 public:
  explicit DomainViolation(const std::string& what) : Error(what) {}
};

// A table lookup exceeded the configured limits.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

// A caller broke an interface contract (e.g. fed a non-alternating series
// to the alternating-series accelerator).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

// Malformed selector / flags at the orchestration layer.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace apery
