#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace liegate {

// Root of everything the library throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

// Requested time at or past the first focal point of a trajectory.
class CausticError : public DomainError {
public:
  CausticError(const std::string& what, double valid_to)
      : DomainError(what), valid_to_(valid_to) {}
  double valid_to() const noexcept { return valid_to_; }

private:
  double valid_to_;
};

class ConfigError : public Error {
public:
  ConfigError(const std::string& field, const std::string& what)
      : Error(field.empty() ? what : field + ": " + what), field_(field) {}
  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

// Adaptive integration gave up. last_good_time is the last accepted step.
class IntegrationError : public Error {
public:
  IntegrationError(const std::string& what, double last_good_time)
      : Error(what), last_good_(last_good_time) {}
  double last_good_time() const noexcept { return last_good_; }

private:
  double last_good_;
};

// An internal identity that must hold did not (e.g. algebra closure).
class ConsistencyError : public Error {
public:
  using Error::Error;
};

// Case the chosen oracle does not cover.
class UnsupportedError : public DomainError {
public:
  using DomainError::DomainError;
};

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace liegate
