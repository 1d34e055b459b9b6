#pragma once

#include <compare>
#include <concepts>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace graduation {

namespace detail {

template <class Int>
Int gcd_of(const Int& a, const Int& b) {
  if constexpr (std::is_integral_v<Int>) {
    return std::gcd(a, b);
  } else {
    return boost::multiprecision::gcd(a, b);
  }
}

template <class Int>
Int abs_of(const Int& a) {
  return a < 0 ? Int(-a) : a;
}

}  // namespace detail

// Exact fraction num/den kept in lowest terms with den > 0; zero is 0/1.
template <class Int>
class basic_rational {
 public:
  using integer_type = Int;

  basic_rational() : num_(0), den_(1) {}

  template <std::integral I>
  basic_rational(I value) : num_(value), den_(1) {}  // NOLINT: implicit by intent

  basic_rational(Int value) : num_(std::move(value)), den_(1) {}  // NOLINT

  basic_rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("rational: zero denominator");
    normalize();
  }

  const Int& numerator() const { return num_; }
  const Int& denominator() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ < 0 ? -1 : (num_ == 0 ? 0 : 1); }

  basic_rational operator-() const {
    basic_rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  basic_rational& operator+=(const basic_rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
      num_ += rhs.num_;
      return *this;
    }
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
  }

  basic_rational& operator-=(const basic_rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
      num_ -= rhs.num_;
      return *this;
    }
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
  }

  basic_rational& operator*=(const basic_rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    if (den_ != 1) normalize();
    return *this;
  }

  basic_rational& operator/=(const basic_rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational: division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
  }

  friend basic_rational operator+(basic_rational a, const basic_rational& b) { return a += b; }
  friend basic_rational operator-(basic_rational a, const basic_rational& b) { return a -= b; }
  friend basic_rational operator*(basic_rational a, const basic_rational& b) { return a *= b; }
  friend basic_rational operator/(basic_rational a, const basic_rational& b) { return a /= b; }

  friend bool operator==(const basic_rational& a, const basic_rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::strong_ordering operator<=>(const basic_rational& a, const basic_rational& b) {
    const Int lhs = a.num_ * b.den_;
    const Int rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (rhs < lhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend basic_rational abs(const basic_rational& a) { return a.sign() < 0 ? -a : a; }

  // Correctly rounded for operands of any magnitude (goes through a wide binary float).
  double to_double() const {
    if constexpr (std::is_integral_v<Int>) {
      return static_cast<double>(num_) / static_cast<double>(den_);
    } else {
      using wide = boost::multiprecision::cpp_bin_float_100;
      const wide q = wide(num_) / wide(den_);
      return q.template convert_to<double>();
    }
  }

  // "p/q", or "p" when integral.
  std::string to_string() const {
    if (den_ == 1) return int_str(num_);
    return int_str(num_) + "/" + int_str(den_);
  }

  friend std::ostream& operator<<(std::ostream& os, const basic_rational& r) {
    return os << r.to_string();
  }

 private:
  static std::string int_str(const Int& v) {
    if constexpr (std::is_integral_v<Int>) {
      return std::to_string(v);
    } else {
      return v.str();
    }
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    const Int g = detail::gcd_of(detail::abs_of(num_), den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

using BigInt = boost::multiprecision::cpp_int;
using Rational = basic_rational<BigInt>;

}  // namespace graduation
