#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dwellroute {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (negative dwell, tau <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition (length mismatch, target not in route, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Exact solver asked to work beyond its hard size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A non-finite value showed up inside an iterative solver.
class NumericError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class UnsupportedFormatError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace dwellroute
