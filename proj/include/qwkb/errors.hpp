#pragma once

#include <stdexcept>
#include <string>

namespace qwkb {

// Error hierarchy. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad precision, malformed config, missing data files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A series or table was asked for beyond the order it was generated to.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, int achieved_digits)
      : Error(what), achieved_digits_(achieved_digits) {}
  int achieved_digits() const noexcept { return achieved_digits_; }

 private:
  int achieved_digits_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class LookupError : public Error {
 public:
  using Error::Error;
};

class UnsupportedStrategyError : public Error {
 public:
  using Error::Error;
};

}  // namespace qwkb
