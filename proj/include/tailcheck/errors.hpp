#pragma once

#include <stdexcept>

namespace tailcheck {

// An adaptive integral could not reach the requested absolute tolerance
// within its subdivision budget, or met a non-finite integrand value.
class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No raw observation lies strictly above the threshold x0.
class NoExceedancesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every exceedance sits exactly at the threshold; the exponent MLE
// denominator is zero.
class DegenerateSampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A score-basis self-check failed, or an operator denominator 1 - <f,g>
// is too close to zero to invert.
class BasisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A critical-value table is incompatible with the report it is applied to
// (different statistic kind or grid).
class TableMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad simulation configuration, including a threshold so high that most
// replications have too small a tail.
class SimulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Unreadable, empty, or malformed input data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tailcheck
