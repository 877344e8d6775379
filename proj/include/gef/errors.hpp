#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gef {

// Base class for every contract violation raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A request for zero items (samples, replicas, ...).
struct EmptyRequestError : Error {
  using Error::Error;
};

// Derivative order outside the supported {0, 1} range.
struct UnsupportedOrderError : Error {
  using Error::Error;
};

// Coincident points in a configuration that requires distinct ones.
struct DegenerateConfigError : Error {
  using Error::Error;
};

// A covariance factorization fell below the pivot tolerance.  Carries the
// smallest pivot seen so callers can report how close to singular they were.
struct ConditioningError : Error {
  ConditioningError(const std::string& msg, double pivot)
      : Error(msg), smallest_pivot(pivot) {}
  double smallest_pivot = 0.0;
};

struct ShapeError : Error {
  using Error::Error;
};

struct SizeLimitError : Error {
  using Error::Error;
};

// A linear statistic whose support reaches outside the trusted disk.
struct UntrustedRegionError : Error {
  using Error::Error;
};

// Root extraction failed to converge or certify; carries the replica seed.
struct RootFindError : Error {
  RootFindError(const std::string& msg, std::uint64_t s) : Error(msg), seed(s) {}
  std::uint64_t seed = 0;
};

struct NoZerosError : Error {
  using Error::Error;
};

// A subset-indexed transform was called with missing entries.
struct IncompleteInputError : Error {
  using Error::Error;
};

// A quadrature input that has not decayed below tolerance at the grid end.
struct TruncationError : Error {
  using Error::Error;
};

// Mixing natural-intensity and unit-intensity quantities.
struct UnitError : Error {
  using Error::Error;
};

// |khat| never drops below 1/2 on the grid, so the Riemann-Lebesgue constant
// of the variance lower bound cannot be determined.
struct BoundUndefinedError : Error {
  using Error::Error;
};

struct FitError : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

// Sample with zero variance handed to a normality test.
struct DegenerateDistributionError : Error {
  using Error::Error;
};

// A caller-supplied function handle broke its stated contract
// (e.g. a non-monotone merge distance in the covering procedure).
struct ContractViolationError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct UsageError : Error {
  using Error::Error;
};

}  // namespace gef
