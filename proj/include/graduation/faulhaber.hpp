#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "graduation/rational.hpp"

namespace graduation {

// Memoized Bernoulli numbers with B_1 = -1/2, from the recurrence
//   sum_{j=0}^{k} C(k+1, j) B_j = 0   (k >= 1),  B_0 = 1.
// The table grows on demand; access is serialized by an internal mutex.
class BernoulliTable {
 public:
  static constexpr std::size_t default_size = 65;  // B_0 .. B_64

  BernoulliTable() { extend(default_size); }

  Rational operator()(std::size_t k) {
    std::lock_guard lock(mutex_);
    if (k >= values_.size()) extend(k + 1);
    return values_[k];
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return values_.size();
  }

 private:
  // Caller holds the lock (or is the constructor).
  void extend(std::size_t count) {
    if (values_.empty()) values_.emplace_back(1);
    while (values_.size() < count) {
      const std::size_t k = values_.size();
      // Row k+1 of Pascal's triangle, needed up to column k-1.
      BigInt binom = 1;  // C(k+1, 0)
      Rational acc;
      for (std::size_t j = 0; j < k; ++j) {
        if (!values_[j].is_zero()) acc += Rational(binom) * values_[j];
        binom = binom * BigInt(k + 1 - j) / BigInt(j + 1);
      }
      // binom is now C(k+1, k) = k+1.
      values_.push_back(-acc / Rational(binom));
    }
  }

  mutable std::mutex mutex_;
  std::vector<Rational> values_;
};

inline BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

inline Rational bernoulli(std::size_t k) { return bernoulli_table()(k); }

// Closed-form power sum as an integer polynomial over a common denominator:
//   sum_{i=0}^{N-1} i^m = (1/(m+1)) sum_{k=0}^{m} C(m+1,k) B_k N^{m+1-k}
//                       = (sum_j coeff[j] N^j) / denominator.
class FaulhaberPolynomial {
 public:
  explicit FaulhaberPolynomial(unsigned degree) : degree_(degree) {
    std::vector<Rational> rational_coeffs(degree + 2);
    BigInt binom = 1;  // C(m+1, k)
    for (unsigned k = 0; k <= degree; ++k) {
      rational_coeffs[degree + 1 - k] = Rational(binom) * bernoulli(k) / Rational(degree + 1);
      binom = binom * BigInt(degree + 1 - k) / BigInt(k + 1);
    }
    denominator_ = 1;
    for (const auto& c : rational_coeffs) {
      denominator_ = boost::multiprecision::lcm(denominator_, c.denominator());
    }
    coeffs_.reserve(rational_coeffs.size());
    for (const auto& c : rational_coeffs) {
      coeffs_.push_back(c.numerator() * (denominator_ / c.denominator()));
    }
  }

  unsigned degree() const { return degree_; }

  // sum_{i=0}^{upper-1} i^m, with 0^0 = 1.
  BigInt evaluate(const BigInt& upper) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * upper + *it;
    return acc / denominator_;
  }

 private:
  unsigned degree_;
  std::vector<BigInt> coeffs_;  // coeffs_[j] multiplies upper^j
  BigInt denominator_;
};

namespace detail {

class FaulhaberCache {
 public:
  const FaulhaberPolynomial& get(unsigned m) {
    std::lock_guard lock(mutex_);
    while (polys_.size() <= m) {
      polys_.push_back(std::make_unique<FaulhaberPolynomial>(static_cast<unsigned>(polys_.size())));
    }
    return *polys_[m];
  }

 private:
  std::mutex mutex_;
  std::vector<std::unique_ptr<FaulhaberPolynomial>> polys_;
};

inline FaulhaberCache& faulhaber_cache() {
  static FaulhaberCache cache;
  return cache;
}

}  // namespace detail

// sum_{k=1}^{n} k^m, exact. Evaluates the closed form at upper limit n+1 and
// drops the 0^0 term the closed form carries at m = 0.
inline Rational faulhaber_sum(unsigned m, std::uint64_t n) {
  if (m == 0) return Rational(BigInt(n));
  const auto& poly = detail::faulhaber_cache().get(m);
  return Rational(poly.evaluate(BigInt(n) + 1));
}

// Literal loop sum_{k=1}^{n} k^m. Oracle for faulhaber_sum; meant for n <= 1e6.
inline Rational brute_force_power_sum(unsigned m, std::uint64_t n) {
  BigInt acc = 0;
  for (std::uint64_t k = 1; k <= n; ++k) acc += boost::multiprecision::pow(BigInt(k), m);
  return Rational(std::move(acc));
}

// All prefix sums of the literal loop: result[n] = sum_{k=1}^{n} k^m, n = 0..n_max.
inline std::vector<BigInt> brute_force_power_prefix_sums(unsigned m, std::uint64_t n_max) {
  std::vector<BigInt> out;
  out.reserve(n_max + 1);
  BigInt acc = 0;
  out.push_back(acc);
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    acc += boost::multiprecision::pow(BigInt(k), m);
    out.push_back(acc);
  }
  return out;
}

}  // namespace graduation
