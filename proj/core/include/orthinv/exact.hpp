// Copyright 2026 The orthinv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORTHINV_EXACT_HPP
#define ORTHINV_EXACT_HPP

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orthinv {

/// Raised when a division by an exact zero is attempted.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when textual input cannot be read as an exact scalar.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT: implicit by design of numeric types

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Reads "p", "-p", "p/q" or "-p/q".
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(value_); }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// "p/q", with q omitted when it equals 1.
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  friend Rational operator-(const Rational& v) { return Rational(mpq_class(-v.value_)); }

  friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

 private:
  mpq_class value_{0};
};

/// Element of Q(i), stored as a pair of reduced rationals. Values with a zero
/// imaginary part behave exactly like their real part.
class GaussianRational {
 public:
  GaussianRational() = default;

  template <std::integral I>
  GaussianRational(I value) : re_(value) {}  // NOLINT
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  /// Reads the canonical text form "a/b+c/d*i" (either part may be absent),
  /// or a comma separated pair "a/b,c/d".
  static GaussianRational parse(std::string_view text);

  [[nodiscard]] const Rational& real() const { return re_; }
  [[nodiscard]] const Rational& imag() const { return im_; }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  [[nodiscard]] GaussianRational conj() const { return {re_, -im_}; }
  /// z * conj(z).
  [[nodiscard]] Rational norm() const { return re_ * re_ + im_ * im_; }

  [[nodiscard]] std::string to_string() const;

  GaussianRational& operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    if (!rhs.im_.is_zero()) im_ -= rhs.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }
  friend GaussianRational operator-(const GaussianRational& v) { return {-v.re_, -v.im_}; }

  friend bool operator==(const GaussianRational& lhs, const GaussianRational& rhs) {
    return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianRational& v) { return os << v.to_string(); }

 private:
  Rational re_;
  Rational im_;
};

/// Coefficient field used by every polynomial in the library.
using Scalar = GaussianRational;

/// n! (memoized).
Rational factorial(int n);

/// Binomial coefficient C(n, k) for integers 0 <= k <= n; zero otherwise.
Rational binomial(int n, int k);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);
GaussianRational pochhammer(const GaussianRational& a, int n);

/// z^n for n >= 0.
Rational power(const Rational& base, int exponent);
GaussianRational power(const GaussianRational& base, int exponent);

}  // namespace orthinv

#endif  // ORTHINV_EXACT_HPP
