#pragma once

// Coefficient-extraction oracles for the Fano degree, independent of the
// localization sum:
//
//  * dm_degree: the coefficient of x_0^n x_1^{n-1} ... x_k^{n-k} in
//      prod_{|v| = d} (sum_i v_i x_i) * (x_0 + ... + x_k)^delta * prod_{i<j} (x_i - x_j)
//  * vdw_lines: the coefficient of x^n y^{n-1} in
//      (x - y) * prod_{i=0}^{d} ((d-i) x + i y),  d = 2n-3
//
// Only one coefficient is wanted, so every product is truncated to the
// exponents of the target monomial.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fano/bott.hpp"
#include "fano/combinatorics.hpp"
#include "fano/errors.hpp"

namespace fano {

using Exponents = std::vector<unsigned>;

/// Per-variable exponent ceiling; terms above it in any coordinate are dropped.
struct ExponentCap {
  std::vector<unsigned> caps;

  static ExponentCap unbounded(std::size_t num_vars) {
    return {std::vector<unsigned>(num_vars, std::numeric_limits<unsigned>::max())};
  }

  bool admits(std::span<const unsigned> e) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > caps[i]) return false;
    return true;
  }
};

/// Multivariate polynomial over the integers, sparse in exponent vectors.
/// Terms are kept in lexicographic order of exponents; no zero coefficients
/// are stored.
class SparsePolynomial {
 public:
  using TermMap = std::map<Exponents, BigInt>;

  explicit SparsePolynomial(std::size_t num_vars) : num_vars_(num_vars) {
    if (num_vars == 0) throw InvalidArgument("a polynomial needs at least one variable");
  }

  static SparsePolynomial constant(std::size_t num_vars, const BigInt& c) {
    SparsePolynomial p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
  }

  static SparsePolynomial variable(std::size_t num_vars, std::size_t i) {
    SparsePolynomial p(num_vars);
    Exponents e(num_vars, 0);
    e.at(i) = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  /// sum_i coeffs[i] * x_i
  static SparsePolynomial linear_form(std::span<const long> coeffs) {
    SparsePolynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponents e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(std::move(e), coeffs[i]);
    }
    return p;
  }

  std::size_t num_vars() const noexcept { return num_vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponents e, const BigInt& c) {
    if (e.size() != num_vars_)
      throw InvalidArgument("exponent vector of length " + std::to_string(e.size()) + " in a polynomial of " +
                            std::to_string(num_vars_) + " variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
    check_same_vars(a, b);
    SparsePolynomial out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);

  static void check_same_vars(const SparsePolynomial& a, const SparsePolynomial& b) {
    if (a.num_vars_ != b.num_vars_)
      throw InvalidArgument("polynomials in " + std::to_string(a.num_vars_) + " and " + std::to_string(b.num_vars_) +
                            " variables");
  }

 private:
  friend SparsePolynomial mul_truncated(const SparsePolynomial&, const SparsePolynomial&, const ExponentCap&);

  std::size_t num_vars_;
  TermMap terms_;
};

/// a * b with every term exceeding `cap` discarded.
inline SparsePolynomial mul_truncated(const SparsePolynomial& a, const SparsePolynomial& b, const ExponentCap& cap) {
  SparsePolynomial::check_same_vars(a, b);
  if (cap.caps.size() != a.num_vars())
    throw InvalidArgument("exponent cap has " + std::to_string(cap.caps.size()) + " entries for " +
                          std::to_string(a.num_vars()) + " variables");
  SparsePolynomial out(a.num_vars());
  Exponents e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      bool fits = true;
      for (std::size_t i = 0; i < e.size() && fits; ++i) {
        e[i] = ea[i] + eb[i];
        fits = e[i] <= cap.caps[i];
      }
      if (!fits) continue;
      auto [it, inserted] = out.terms_.try_emplace(e, 0);
      it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
  return out;
}

inline SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  return mul_truncated(a, b, ExponentCap::unbounded(a.num_vars()));
}

/// base^exponent by repeated squaring, truncated at every step.
inline SparsePolynomial pow_truncated(const SparsePolynomial& base, unsigned long exponent, const ExponentCap& cap) {
  SparsePolynomial result = SparsePolynomial::constant(base.num_vars(), 1);
  SparsePolynomial square = base;
  while (exponent > 0) {
    if (exponent & 1) result = mul_truncated(result, square, cap);
    exponent >>= 1;
    if (exponent > 0) square = mul_truncated(square, square, cap);
  }
  return result;
}

/// prod_{0 <= i < j < k_plus_1} (x_i - x_j), expanded.
inline SparsePolynomial vandermonde(std::size_t k_plus_1) {
  if (k_plus_1 == 0) throw InvalidArgument("vandermonde needs at least one variable");
  SparsePolynomial out = SparsePolynomial::constant(k_plus_1, 1);
  std::vector<long> coeffs(k_plus_1, 0);
  for (std::size_t i = 0; i < k_plus_1; ++i) {
    for (std::size_t j = i + 1; j < k_plus_1; ++j) {
      std::fill(coeffs.begin(), coeffs.end(), 0);
      coeffs[i] = 1;
      coeffs[j] = -1;
      out = out * SparsePolynomial::linear_form(coeffs);
    }
  }
  return out;
}

/// The exponents (n, n-1, ..., n-k) of the monomial dm_degree extracts.
inline Exponents dm_target(const ProblemInstance& p) {
  Exponents e(p.k() + 1);
  for (unsigned i = 0; i <= p.k(); ++i) e[i] = p.n() - i;
  return e;
}

/// The full product whose target coefficient is the degree, multiplied under
/// `cap`: the C(d+k, d) linear forms in lexicographic composition order, then
/// (x_0 + ... + x_k)^delta, then the Vandermonde factors.
inline SparsePolynomial dm_product(const ProblemInstance& p, const ExponentCap& cap) {
  if (p.delta() < 0) throw NegativeDelta(p.delta());
  const std::size_t vars = p.k() + 1;
  SparsePolynomial acc = SparsePolynomial::constant(vars, 1);
  std::vector<long> coeffs(vars);
  for (const Composition& v : enumerate_compositions(p.d(), static_cast<unsigned>(vars))) {
    std::copy(v.parts().begin(), v.parts().end(), coeffs.begin());
    acc = mul_truncated(acc, SparsePolynomial::linear_form(coeffs), cap);
  }
  std::fill(coeffs.begin(), coeffs.end(), 1);
  acc = mul_truncated(acc, pow_truncated(SparsePolynomial::linear_form(coeffs), p.delta(), cap), cap);
  return mul_truncated(acc, vandermonde(vars), cap);
}

inline BigInt dm_degree(const ProblemInstance& p) {
  const Exponents target = dm_target(p);
  return dm_product(p, ExponentCap{target}).coefficient(target);
}

/// The number of lines on a general hypersurface of degree 2n-3 in P^n, as
/// the x^n y^{n-1} coefficient of (x - y) prod_{i=0}^{d} ((d-i) x + i y).
inline BigInt vdw_lines(unsigned n) {
  if (n < 3) throw InvalidArgument("lines on a degree 2n-3 hypersurface need n >= 3");
  const long d = 2 * static_cast<long>(n) - 3;
  const ExponentCap cap{{n, n - 1}};
  const long diff[] = {1, -1};
  SparsePolynomial acc = SparsePolynomial::linear_form(diff);
  for (long i = 0; i <= d; ++i) {
    const long form[] = {d - i, i};
    acc = mul_truncated(acc, SparsePolynomial::linear_form(form), cap);
  }
  return acc.coefficient({n, n - 1});
}

}  // namespace fano
