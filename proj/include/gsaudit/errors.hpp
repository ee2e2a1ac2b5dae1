#pragma once

#include <stdexcept>
#include <string>

namespace gsaudit {

// Bad arguments or incompatible domain/potential combinations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A torus retraction step too long for the nearest-point map.
class StepSizeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Gradient requested at a configuration with coincident points.
class GradientUndefinedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Table lookup of an absent N.
class LookupError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Malformed table file or header; carries the offending line when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Asymptotic model missing a required coefficient, or applied to the wrong table family.
class ModelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gsaudit
