#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace skew3 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero rational function") {}
};

/// Raised by substitution when a specialized denominator is identically zero.
class DenominatorVanishes : public Error {
 public:
  explicit DenominatorVanishes(const std::string& den)
      : Error("denominator " + den + " vanishes under substitution") {}
};

class InvalidParam : public Error {
 public:
  explicit InvalidParam(const std::string& name)
      : Error("invalid parameter name '" + name + "'") {}
};

class InvalidSpec : public Error {
 public:
  explicit InvalidSpec(std::string field)
      : Error("invalid algebra spec: " + field + " must not be zero"), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message,
              std::vector<std::string> expected = {});
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

class SpecParseError : public Error {
 public:
  SpecParseError(std::size_t line, const std::string& reason)
      : Error("spec line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

class UnknownPreset : public Error {
 public:
  explicit UnknownPreset(const std::string& id) : Error("unknown preset '" + id + "'") {}
};

}  // namespace skew3
