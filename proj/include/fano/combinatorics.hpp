#pragma once

// Lazy lexicographic enumeration of (k+1)-subsets of {1..n+1} and of weak
// compositions of d, plus the exact binomial both counts are checked against.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fano/errors.hpp"

namespace fano {

inline BigInt binomial(unsigned long a, unsigned long b) {
  BigInt result;
  if (b > a) return result;  // zero
  mpz_bin_uiui(result.get_mpz_t(), a, b);
  return result;
}

namespace detail {

// Throws if C(a, b) does not fit; stream ranks are 64-bit.
inline std::uint64_t binomial_u64(unsigned long a, unsigned long b) {
  static_assert(sizeof(unsigned long) >= sizeof(std::uint64_t));
  const BigInt value = binomial(a, b);
  if (!value.fits_ulong_p())
    throw InvalidArgument("C(" + std::to_string(a) + ", " + std::to_string(b) +
                          ") exceeds the 64-bit rank range");
  return value.get_ui();
}

inline void check_slice(std::uint64_t lo, std::uint64_t hi, std::uint64_t size) {
  if (lo > hi || hi > size)
    throw InvalidArgument("rank slice [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          ") is outside [0, " + std::to_string(size) + ")");
}

}  // namespace detail

/// A sorted (k+1)-subset of {1..n+1}. Members are 1-based.
class IndexSet {
 public:
  IndexSet() = default;

  /// Validates: strictly increasing, each in [1, universe], non-empty.
  IndexSet(std::vector<unsigned> members, unsigned universe)
      : members_(std::move(members)), universe_(universe) {
    if (members_.empty() || members_.size() > universe_)
      throw InvalidArgument("index set size must be in [1, " + std::to_string(universe_) + "]");
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] < 1 || members_[i] > universe_)
        throw InvalidArgument("index " + std::to_string(members_[i]) + " outside [1, " +
                              std::to_string(universe_) + "]");
      if (i > 0 && members_[i - 1] >= members_[i])
        throw InvalidArgument("index set members must be strictly increasing");
    }
  }

  std::span<const unsigned> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  unsigned universe() const noexcept { return universe_; }
  unsigned operator[](std::size_t i) const { return members_[i]; }

  bool contains(unsigned j) const {
    return std::binary_search(members_.begin(), members_.end(), j);
  }

  /// {1..universe} \ members, increasing.
  std::vector<unsigned> complement() const {
    std::vector<unsigned> out;
    out.reserve(universe_ - members_.size());
    auto it = members_.begin();
    for (unsigned j = 1; j <= universe_; ++j) {
      if (it != members_.end() && *it == j)
        ++it;
      else
        out.push_back(j);
    }
    return out;
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet& a, const IndexSet& b) { return a.members_ <=> b.members_; }

  friend std::ostream& operator<<(std::ostream& os, const IndexSet& s) {
    os << '{';
    for (std::size_t i = 0; i < s.members_.size(); ++i) os << (i ? "," : "") << s.members_[i];
    return os << '}';
  }

 private:
  friend class IndexSetStream;
  struct Unchecked {};
  IndexSet(Unchecked, std::vector<unsigned> members, unsigned universe)
      : members_(std::move(members)), universe_(universe) {}

  std::vector<unsigned> members_;
  unsigned universe_ = 0;
};

/// Weak composition: non-negative parts summing to a fixed total.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidArgument("a composition needs at least one part");
  }

  std::span<const unsigned> parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  unsigned operator[](std::size_t i) const { return parts_[i]; }
  unsigned total() const { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

  friend std::ostream& operator<<(std::ostream& os, const Composition& c) {
    os << '(';
    for (std::size_t i = 0; i < c.parts_.size(); ++i) os << (i ? "," : "") << c.parts_[i];
    return os << ')';
  }

 private:
  friend class CompositionStream;
  std::vector<unsigned> parts_;
};

/// All `subset_size`-subsets of {1..universe} in lexicographic order, generated
/// lazily. A stream may be narrowed to a rank range [lo, hi) so that parallel
/// consumers each walk a disjoint slice.
class IndexSetStream {
 public:
  IndexSetStream(unsigned universe, unsigned subset_size) : universe_(universe), subset_size_(subset_size) {
    if (universe == 0 || subset_size == 0)
      throw InvalidArgument("index set enumeration needs positive sizes");
    if (subset_size > universe)
      throw InvalidArgument("subset size " + std::to_string(subset_size) + " exceeds universe " +
                            std::to_string(universe));
    total_ = detail::binomial_u64(universe, subset_size);
    hi_ = total_;
  }

  /// Total number of subsets, independent of any slice.
  std::uint64_t total() const noexcept { return total_; }
  std::uint64_t size() const noexcept { return hi_ - lo_; }
  unsigned universe() const noexcept { return universe_; }
  unsigned subset_size() const noexcept { return subset_size_; }

  IndexSetStream slice(std::uint64_t lo, std::uint64_t hi) const {
    detail::check_slice(lo, hi, total_);
    IndexSetStream s = *this;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
  }

  /// The subset of lexicographic rank `rank` (0-based).
  IndexSet unrank(std::uint64_t rank) const {
    detail::check_slice(rank, rank + 1, total_);
    std::vector<unsigned> members;
    members.reserve(subset_size_);
    unsigned candidate = 1;
    for (unsigned pos = 0; pos < subset_size_; ++pos) {
      for (;; ++candidate) {
        // subsets whose pos-th member is `candidate`, given the prefix
        const std::uint64_t with = detail::binomial_u64(universe_ - candidate, subset_size_ - pos - 1);
        if (rank < with) break;
        rank -= with;
      }
      members.push_back(candidate++);
    }
    return IndexSet(IndexSet::Unchecked{}, std::move(members), universe_);
  }

  class iterator {
   public:
    using value_type = IndexSet;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const IndexSet& operator*() const { return current_; }
    const IndexSet* operator->() const { return &current_; }

    iterator& operator++() {
      if (--remaining_ > 0) advance();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.remaining_ == 0; }

   private:
    friend class IndexSetStream;
    iterator(IndexSet first, std::uint64_t count) : current_(std::move(first)), remaining_(count) {}

    void advance() {
      auto& m = current_.members_;
      const unsigned universe = current_.universe_;
      const std::size_t r = m.size();
      // rightmost member that can still move right
      std::size_t i = r;
      while (i > 0 && m[i - 1] == universe - (r - i)) --i;
      // i == 0 cannot happen while remaining_ > 0
      ++m[i - 1];
      for (std::size_t j = i; j < r; ++j) m[j] = m[j - 1] + 1;
    }

    IndexSet current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const {
    if (lo_ == hi_) return {};
    return iterator(unrank(lo_), hi_ - lo_);
  }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  unsigned universe_;
  unsigned subset_size_;
  std::uint64_t total_ = 0;
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

/// Weak compositions of `total` into `parts` parts in lexicographic order,
/// e.g. (3, 2) gives (0,3),(1,2),(2,1),(3,0).
class CompositionStream {
 public:
  CompositionStream(unsigned total, unsigned parts) : sum_(total), parts_(parts) {
    if (parts == 0) throw InvalidArgument("composition enumeration needs at least one part");
    count_ = detail::binomial_u64(total + parts - 1, parts - 1);
    hi_ = count_;
  }

  std::uint64_t total() const noexcept { return count_; }
  std::uint64_t size() const noexcept { return hi_ - lo_; }

  CompositionStream slice(std::uint64_t lo, std::uint64_t hi) const {
    detail::check_slice(lo, hi, count_);
    CompositionStream s = *this;
    s.lo_ = lo;
    s.hi_ = hi;
    return s;
  }

  Composition unrank(std::uint64_t rank) const {
    detail::check_slice(rank, rank + 1, count_);
    std::vector<unsigned> v(parts_, 0);
    unsigned left = sum_;
    for (unsigned pos = 0; pos + 1 < parts_; ++pos) {
      const unsigned rest = parts_ - pos - 1;
      unsigned a = 0;
      for (;; ++a) {
        // completions of the remaining `rest` parts summing to left - a
        const std::uint64_t with = detail::binomial_u64(left - a + rest - 1, rest - 1);
        if (rank < with) break;
        rank -= with;
      }
      v[pos] = a;
      left -= a;
    }
    v[parts_ - 1] = left;
    Composition c;
    c.parts_ = std::move(v);
    return c;
  }

  class iterator {
   public:
    using value_type = Composition;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    const Composition& operator*() const { return current_; }
    const Composition* operator->() const { return &current_; }

    iterator& operator++() {
      if (--remaining_ > 0) advance();
      return *this;
    }
    void operator++(int) { ++*this; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.remaining_ == 0; }

   private:
    friend class CompositionStream;
    iterator(Composition first, std::uint64_t count) : current_(std::move(first)), remaining_(count) {}

    void advance() {
      auto& v = current_.parts_;
      // move one unit from the rightmost non-zero part j >= 1 into part j-1,
      // and park the rest of part j at the end
      std::size_t j = v.size() - 1;
      while (v[j] == 0) --j;
      const unsigned rest = v[j] - 1;
      ++v[j - 1];
      v[j] = 0;
      v.back() = rest;
    }

    Composition current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const {
    if (lo_ == hi_) return {};
    return iterator(unrank(lo_), hi_ - lo_);
  }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  unsigned sum_;
  unsigned parts_;
  std::uint64_t count_ = 0;
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

inline IndexSetStream enumerate_index_sets(unsigned n_plus_1, unsigned k_plus_1) {
  return IndexSetStream(n_plus_1, k_plus_1);
}

inline CompositionStream enumerate_compositions(unsigned d, unsigned parts) {
  return CompositionStream(d, parts);
}

}  // namespace fano
