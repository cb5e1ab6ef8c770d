#pragma once

#include <stdexcept>
#include <string>

namespace gravab {

// Failure categories. The CLI maps each one onto an exit code.
enum class ErrorKind {
  invalid_argument,     // violated precondition on a value
  invalid_geometry,     // coincident arm/source positions, negative masses
  inconsistent_scenario,
  config,               // malformed or incomplete configuration document
  singular_mode,        // omega == 0 in a coupling
  cutoff_too_small,
  infrared_divergence,
  truncation_risk,      // Fock truncation too small for the requested coupling
  numerical_instability,
  singular_integrand,
};

const char* to_string(ErrorKind kind) noexcept;

// True for the kinds that describe bad input rather than a numerical failure.
bool is_input_error(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gravab
