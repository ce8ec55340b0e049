#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uncrossed {

// Base of every error raised by the library. Each category maps to one
// failure mode named in the public contracts.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
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

// Input is well-formed but outside what the operation supports
// (e.g. a disconnected graph handed to a genus computation).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// A bound or exact formula whose hypotheses do not hold for the inputs.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

class SearchBudgetError : public Error {
 public:
  explicit SearchBudgetError(const std::string& what, double product = 0.0)
      : Error(what), product_(product) {}
  // Π_v (deg(v)-1)! of the offending candidate, 0 when the limit hit was
  // not a rotation budget.
  double product() const noexcept { return product_; }

 private:
  double product_;
};

class MalformedCertificate : public Error {
 public:
  using Error::Error;
};

class ConstructionIntegrityError : public Error {
 public:
  using Error::Error;
};

class RenderError : public Error {
 public:
  using Error::Error;
};

}  // namespace uncrossed
