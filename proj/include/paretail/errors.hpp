#pragma once

#include <stdexcept>
#include <string>

namespace paretail {

/// Index outside the valid range of a table or series.
class OutOfRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Input that makes an inversion or rebasing singular (zero leading coefficient).
class SingularInputError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument outside a function's domain (u outside (0,1), unordered points, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or inconsistent arguments.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Requested truncation order is beyond what the implementation tabulates.
class UnsupportedOrderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The distribution does not offer the requested capability (quantile, sampler, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact arithmetic mode was asked for a value that is not representable
/// in it (e.g. an irrational power of a rational).
class NotRepresentableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The moment being asked for does not exist (a beta-function argument is
/// nonpositive). Kept apart from DomainError so front ends can report
/// "moment does not exist" rather than a numerical failure.
class InfiniteMomentError : public std::runtime_error {
 public:
  InfiniteMomentError(const std::string& what, int index = -1)
      : std::runtime_error(what), index_(index) {}

  /// 1-based position of the offending component, or -1 when not tied to one.
  int index() const noexcept { return index_; }

 private:
  int index_;
};

}  // namespace paretail
