#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fano {

using BigInt = mpz_class;
using ExactRational = mpq_class;  // GMP keeps mpq_class canonical after arithmetic

/// Bad parameters: k >= n, d < 1, empty sizes, length mismatches.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// delta < 0: the residue sum has no meaning.
class NegativeDelta : public InvalidArgument {
 public:
  explicit NegativeDelta(long long delta)
      : InvalidArgument("expected dimension is negative (delta = " + std::to_string(delta) + ")"),
        delta_(delta) {}
  long long delta() const noexcept { return delta_; }

 private:
  long long delta_;
};

/// Two weights coincide. Indices are 1-based, first < second.
class DistinctnessViolation : public InvalidArgument {
 public:
  DistinctnessViolation(std::size_t first, std::size_t second)
      : InvalidArgument("weights are not pairwise distinct: h_" + std::to_string(first) + " == h_" +
                        std::to_string(second)),
        first_(first),
        second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// d == 2 together with n < 2k+1, and no override given.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Something that cannot happen on correct code: zero T_I on validated weights,
/// a non-integral residue sum, disagreeing methods or trials.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace fano
