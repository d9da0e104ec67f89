#pragma once

#include <stdexcept>
#include <string>

namespace flncs {

// Argument outside the mathematical domain of an operation (n > N, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed user configuration: bad window, unknown observable, bad flag value.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flncs
