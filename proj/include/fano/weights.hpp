#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fano/errors.hpp"

namespace fano {

/// Torus weights h_1..h_{n+1}, as exact integers. Construction does not
/// check distinctness; pass the vector through validate() before evaluating.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<BigInt> values) : values_(std::move(values)) {}
  WeightVector(std::initializer_list<long> values) {
    values_.reserve(values.size());
    for (long v : values) values_.emplace_back(v);
  }

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const BigInt> values() const noexcept { return values_; }

  /// 1-based, matching the subscripts of h_i.
  const BigInt& h(unsigned i) const { return values_.at(i - 1); }

  WeightVector scaled(const BigInt& c) const {
    std::vector<BigInt> out(values_);
    for (auto& v : out) v *= c;
    return WeightVector(std::move(out));
  }

  WeightVector shifted(const BigInt& c) const {
    std::vector<BigInt> out(values_);
    for (auto& v : out) v += c;
    return WeightVector(std::move(out));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ",";
      s += values_[i].get_str();
    }
    return s + ")";
  }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<BigInt> values_;
};

/// Returns `w` unchanged, or throws DistinctnessViolation naming the first
/// colliding pair (1-based, in scan order).
inline const WeightVector& validate(const WeightVector& w) {
  const auto v = w.values();
  for (std::size_t j = 1; j < v.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (v[i] == v[j]) throw DistinctnessViolation(i + 1, j + 1);
  return w;
}

inline const WeightVector& validate(const WeightVector& w, std::size_t expected_length) {
  if (w.size() != expected_length)
    throw InvalidArgument("weight vector has length " + std::to_string(w.size()) + ", expected " +
                          std::to_string(expected_length));
  return validate(w);
}

/// (1, 2, ..., n+1).
inline WeightVector sequential_weights(unsigned n_plus_1) {
  if (n_plus_1 == 0) throw InvalidArgument("weight vector length must be positive");
  std::vector<BigInt> v;
  v.reserve(n_plus_1);
  for (unsigned i = 1; i <= n_plus_1; ++i) v.emplace_back(i);
  return WeightVector(std::move(v));
}

/// Pairwise distinct integers drawn uniformly from [-range_bound, range_bound];
/// collisions are redrawn. Deterministic in (n_plus_1, seed, range_bound).
inline WeightVector random_weights(unsigned n_plus_1, std::uint64_t seed, std::int64_t range_bound) {
  if (n_plus_1 == 0) throw InvalidArgument("weight vector length must be positive");
  if (range_bound < 2 * static_cast<std::int64_t>(n_plus_1))
    throw InvalidArgument("range bound " + std::to_string(range_bound) + " is below 2*(n+1) = " +
                          std::to_string(2 * static_cast<std::int64_t>(n_plus_1)));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-range_bound, range_bound);
  std::unordered_set<std::int64_t> seen;
  std::vector<BigInt> v;
  v.reserve(n_plus_1);
  while (v.size() < n_plus_1) {
    const std::int64_t x = dist(rng);
    if (seen.insert(x).second) v.emplace_back(static_cast<long>(x));
  }
  return WeightVector(std::move(v));
}

}  // namespace fano
