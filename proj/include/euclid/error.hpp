#pragma once

#include <stdexcept>
#include <string>

namespace euclid {

/// Base class of every domain error raised by the library. `name()` is the
/// stable, machine-readable error identifier rendered by the CLI.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : Error("division-by-zero", what) {}
};

class NotFinite : public Error {
 public:
  explicit NotFinite(const std::string& what = "number is infinite")
      : Error("not-finite", what) {}
};

class Unsupported : public Error {
 public:
  explicit Unsupported(const std::string& what) : Error("unsupported", what) {}
};

class ZeroDenominator : public Error {
 public:
  explicit ZeroDenominator(const std::string& what)
      : Error("zero-denominator", what) {}
};

}  // namespace euclid
