#pragma once

#include <stdexcept>
#include <string>

namespace radpair {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// A configuration value violates its documented constraint.
class ValidationError : public Error {
 public:
  ValidationError(std::string key, const std::string& what)
      : Error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class SolverError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public SolverError {
 public:
  ConvergenceError(double residual, const std::string& what)
      : SolverError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class PositivityError : public SolverError {
 public:
  PositivityError(double time, double min_eigenvalue, const std::string& what)
      : SolverError(what), time_(time), min_eigenvalue_(min_eigenvalue) {}
  double time() const noexcept { return time_; }
  double min_eigenvalue() const noexcept { return min_eigenvalue_; }

 private:
  double time_;
  double min_eigenvalue_;
};

class SingularSystemError : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace radpair
