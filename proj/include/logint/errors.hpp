#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logint {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected, const std::string& found)
      : Error(format(position, expected, found)), position_(position), expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t position, const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(position) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

#define LOGINT_DEFINE_ERROR(Name) \
  class Name : public Error {     \
   public:                        \
    using Error::Error;           \
  }

LOGINT_DEFINE_ERROR(DivisionByZeroPoly);
LOGINT_DEFINE_ERROR(PoleEvaluation);
LOGINT_DEFINE_ERROR(DomainError);
LOGINT_DEFINE_ERROR(PoleError);

// factorize
LOGINT_DEFINE_ERROR(UnsupportedMultiplicity);
LOGINT_DEFINE_ERROR(UnsupportedFactor);
LOGINT_DEFINE_ERROR(PoleInUnitInterval);

// series reduction / engine
LOGINT_DEFINE_ERROR(UnsupportedAngle);
LOGINT_DEFINE_ERROR(UnsupportedPole);
LOGINT_DEFINE_ERROR(UnsupportedPower);
LOGINT_DEFINE_ERROR(UnsupportedRadical);

// oracle
LOGINT_DEFINE_ERROR(PoleDetected);
LOGINT_DEFINE_ERROR(NoConvergence);

#undef LOGINT_DEFINE_ERROR

/// Raised when a unit-circle quadratic has 1/sin t outside Q(sqrt 2, sqrt 3).
/// The numeric value of the requested term is still reported.
class UnsupportedQuadratic : public Error {
 public:
  UnsupportedQuadratic(const std::string& what, double numeric) : Error(what), numeric_(numeric) {}
  double numeric() const noexcept { return numeric_; }

 private:
  double numeric_;
};

}  // namespace logint
