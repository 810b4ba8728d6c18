#pragma once

// Degree of the Fano scheme F_k(X) of a general degree-d hypersurface X in P^n,
// as the torus-localization sum over the coordinate k-planes of G(k, n):
//
//   deg F_k(X) = (-1)^delta * sum_I  S_I * Q_I^delta / T_I
//
//   S_I = prod over compositions v of d into k+1 parts of  sum_j v_j h_{I_j}
//   Q_I = sum of h_j over j not in I
//   T_I = prod over i in I, j not in I of (h_i - h_j)
//
// The sum is a constant rational function of the weights; any pairwise
// distinct integer weights give the same integer.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fano/combinatorics.hpp"
#include "fano/errors.hpp"
#include "fano/weights.hpp"

namespace fano {

/// (k+1)(n-k) - C(d+k, d). May be negative.
inline long long expected_dimension(unsigned k, unsigned d, unsigned n) {
  if (k >= n) throw InvalidArgument("need k < n (k = " + std::to_string(k) + ", n = " + std::to_string(n) + ")");
  if (d < 1) throw InvalidArgument("need d >= 1");
  BigInt delta = BigInt(k + 1) * BigInt(n - k) - binomial(d + k, d);
  if (!delta.fits_slong_p()) throw InvalidArgument("parameters too large: delta = " + delta.get_str());
  return delta.get_si();
}

/// A validated triple (k, d, n) with its expected dimension.
class ProblemInstance {
 public:
  ProblemInstance(unsigned k, unsigned d, unsigned n) : k_(k), d_(d), n_(n), delta_(expected_dimension(k, d, n)) {}

  unsigned k() const noexcept { return k_; }
  unsigned d() const noexcept { return d_; }
  unsigned n() const noexcept { return n_; }
  long long delta() const noexcept { return delta_; }

  /// d != 2, or n >= 2k+1.
  bool hypothesis_holds() const noexcept { return d_ != 2 || n_ >= 2 * k_ + 1; }

  /// Throws NegativeDelta, or HypothesisViolation unless `force_hypothesis`.
  void require_computable(bool force_hypothesis = false) const {
    if (delta_ < 0) throw NegativeDelta(delta_);
    if (!hypothesis_holds() && !force_hypothesis)
      throw HypothesisViolation("d = 2 with n < 2k+1 (k = " + std::to_string(k_) + ", n = " + std::to_string(n_) +
                                "); the residue sum is still defined, rerun with the hypothesis override");
  }

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;

 private:
  unsigned k_;
  unsigned d_;
  unsigned n_;
  long long delta_;
};

inline BigInt s_term(const WeightVector& w, const IndexSet& I, unsigned d) {
  BigInt product = 1;
  BigInt factor;
  for (const Composition& v : enumerate_compositions(d, static_cast<unsigned>(I.size()))) {
    factor = 0;
    for (std::size_t j = 0; j < I.size(); ++j)
      if (v[j] != 0) factor += v[j] * w.h(I[j]);
    product *= factor;
  }
  return product;
}

inline BigInt q_term(const WeightVector& w, const IndexSet& I) {
  BigInt sum = 0;
  for (unsigned j : I.complement()) sum += w.h(j);
  return sum;
}

/// Zero only when the weights were not validated.
inline BigInt t_term(const WeightVector& w, const IndexSet& I) {
  BigInt product = 1;
  const auto outside = I.complement();
  for (unsigned i : I.members())
    for (unsigned j : outside) product *= w.h(i) - w.h(j);
  return product;
}

/// Contribution of one fixed point, before the global sign.
struct BottTerm {
  IndexSet index_set;
  BigInt s_value;
  BigInt q_value;
  BigInt t_value;
  ExactRational term;
};

inline BottTerm bott_term(const ProblemInstance& p, const WeightVector& w, const IndexSet& I) {
  BottTerm t{I, s_term(w, I, p.d()), q_term(w, I), t_term(w, I), {}};
  if (t.t_value == 0) {
    std::ostringstream msg;
    msg << "T_I vanishes for I = " << I << " at weights " << w.to_string() << "; weights were not validated";
    throw InternalError(msg.str());
  }
  BigInt numerator;
  // mpz_pow_ui gives 0^0 = 1, which is the convention wanted for Q_I^0
  mpz_pow_ui(numerator.get_mpz_t(), t.q_value.get_mpz_t(), static_cast<unsigned long>(p.delta()));
  numerator *= t.s_value;
  t.term = ExactRational(numerator, t.t_value);
  t.term.canonicalize();
  return t;
}

/// Unsigned sum of terms over one rank slice of the index sets.
inline ExactRational bott_partial_sum(const ProblemInstance& p, const WeightVector& w, const IndexSetStream& slice) {
  ExactRational sum = 0;
  for (const IndexSet& I : slice) sum += bott_term(p, w, I).term;
  return sum;
}

struct BottOptions {
  unsigned threads = 1;
  bool force_hypothesis = false;
};

/// (-1)^delta * sum_I S_I Q_I^delta / T_I in lowest terms, before the
/// integrality check. The index sets are split into contiguous rank ranges,
/// one per thread; partial sums are combined in rank order.
inline ExactRational bott_residue_sum(const ProblemInstance& p, const WeightVector& w, const BottOptions& opts = {}) {
  p.require_computable(opts.force_hypothesis);
  validate(w, p.n() + 1);

  const IndexSetStream all = enumerate_index_sets(p.n() + 1, p.k() + 1);
  const std::uint64_t total = all.total();
  const std::uint64_t workers = std::clamp<std::uint64_t>(opts.threads, 1, total);

  std::vector<ExactRational> partial(workers);
  std::vector<std::exception_ptr> failure(workers);
  auto run_slice = [&](std::uint64_t t) {
    try {
      const std::uint64_t lo = total * t / workers;
      const std::uint64_t hi = total * (t + 1) / workers;
      partial[t] = bott_partial_sum(p, w, all.slice(lo, hi));
    } catch (...) {
      failure[t] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::uint64_t t = 1; t < workers; ++t) pool.emplace_back(run_slice, t);
    run_slice(0);
  }
  for (const auto& e : failure)
    if (e) std::rethrow_exception(e);

  ExactRational sum = 0;
  for (const auto& part : partial) sum += part;
  if (p.delta() % 2 != 0) sum = -sum;
  return sum;
}

/// The degree as an exact integer. A non-integral residue sum is an
/// InternalError, never rounded.
inline BigInt fano_degree_bott(const ProblemInstance& p, const WeightVector& w, const BottOptions& opts = {}) {
  const ExactRational sum = bott_residue_sum(p, w, opts);
  if (sum.get_den() != 1)
    throw InternalError("residue sum is not an integer: " + sum.get_str() + " at weights " + w.to_string());
  return sum.get_num();
}

/// Number of lines on a general hypersurface of degree 2n-3 in P^n, summed
/// over pairs i < j with the pair-form factors
///   prod_{a=0}^{2n-3} (a h_i + (2n-3-a) h_j)  /  prod_{m != i,j} (h_i - h_m)(h_j - h_m).
inline BigInt lines_on_hypersurface(unsigned n, const WeightVector& w) {
  if (n < 3) throw InvalidArgument("lines on a degree 2n-3 hypersurface need n >= 3");
  validate(w, n + 1);
  const unsigned d = 2 * n - 3;
  ExactRational sum = 0;
  for (unsigned i = 1; i <= n + 1; ++i) {
    for (unsigned j = i + 1; j <= n + 1; ++j) {
      BigInt s = 1;
      for (unsigned a = 0; a <= d; ++a) s *= a * w.h(i) + (d - a) * w.h(j);
      BigInt t = 1;
      for (unsigned m = 1; m <= n + 1; ++m)
        if (m != i && m != j) t *= (w.h(i) - w.h(m)) * (w.h(j) - w.h(m));
      ExactRational term(s, t);
      term.canonicalize();
      sum += term;
    }
  }
  if (sum.get_den() != 1) throw InternalError("line count is not an integer: " + sum.get_str());
  return sum.get_num();
}

/// Localization on P^2 for the square of the hyperplane class:
///   h1^2/((h3-h1)(h2-h1)) + h2^2/((h3-h2)(h1-h2)) + h3^2/((h1-h3)(h2-h3)),
/// which is identically 1.
inline ExactRational p2_localization_identity(const WeightVector& w) {
  validate(w, 3);
  const BigInt& h1 = w.h(1);
  const BigInt& h2 = w.h(2);
  const BigInt& h3 = w.h(3);
  auto frac = [](const BigInt& num, const BigInt& den) {
    ExactRational q(num, den);
    q.canonicalize();
    return q;
  };
  return frac(h1 * h1, (h3 - h1) * (h2 - h1)) + frac(h2 * h2, (h3 - h2) * (h1 - h2)) +
         frac(h3 * h3, (h1 - h3) * (h2 - h3));
}

}  // namespace fano
