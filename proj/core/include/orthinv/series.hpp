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

#ifndef ORTHINV_SERIES_HPP
#define ORTHINV_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "orthinv/family_id.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

/// Raised when a series operation's precondition on the constant term fails.
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Formal power series in t truncated modulo t^{order+1}, with Poly-in-x
/// coefficients. Binary operations require equal orders.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  /// Coefficients beyond `order` are dropped, missing ones are zero.
  TruncSeries(int order, std::vector<Poly> coefficients);

  static TruncSeries constant(int order, Poly c);
  /// c * t^k, or zero when k exceeds the order.
  static TruncSeries monomial(int order, Poly c, int k);

  [[nodiscard]] int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const Poly& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<Poly>& coefficients() const { return coeffs_; }

  TruncSeries& operator+=(const TruncSeries& rhs);
  TruncSeries& operator-=(const TruncSeries& rhs);
  TruncSeries& operator*=(const Poly& p);
  TruncSeries& operator*=(const Scalar& c);

  friend TruncSeries operator+(TruncSeries lhs, const TruncSeries& rhs) { return lhs += rhs; }
  friend TruncSeries operator-(TruncSeries lhs, const TruncSeries& rhs) { return lhs -= rhs; }
  /// Truncated Cauchy product.
  friend TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs);
  friend TruncSeries operator*(TruncSeries s, const Poly& p) { return s *= p; }
  friend TruncSeries operator*(const Poly& p, TruncSeries s) { return s *= p; }
  friend TruncSeries operator*(TruncSeries s, const Scalar& c) { return s *= c; }
  friend TruncSeries operator*(const Scalar& c, TruncSeries s) { return s *= c; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

  /// Multiplicative inverse; the constant term must be a nonzero constant.
  [[nodiscard]] TruncSeries inverse() const;
  /// exp(S); the constant term must be zero.
  [[nodiscard]] TruncSeries exp() const;
  /// log(S); the constant term must be 1.
  [[nodiscard]] TruncSeries log() const;
  /// S^gamma = exp(gamma log S); the constant term must be 1.
  [[nodiscard]] TruncSeries pow(const Scalar& gamma) const;
  /// S^{e(x)} = exp(e(x) log S) for a polynomial exponent.
  [[nodiscard]] TruncSeries pow(const Poly& exponent) const;

 private:
  void require_same_order(const TruncSeries& other) const;

  std::vector<Poly> coeffs_;
};

/// Expands the family's generating function to order N. The t^n coefficient
/// is the n-th family member. Jacobi uses the classical two-square-root
/// generating function
///   R^{-1} ((1 - t + R)/2)^{-alpha} ((1 + t + R)/2)^{-beta},
///   R = sqrt(1 - 2xt + t^2),
/// all other families their textbook forms in the normalizations of this
/// library (Hermite: exp(xt - t^2/4); Charlier: e^{-at}(1+t)^x; Meixner:
/// (1 - t/c)^x (1 - t)^{-x-beta}).
TruncSeries expand_generating_function(Family family, const ParamSet& params, int order);

}  // namespace orthinv

#endif  // ORTHINV_SERIES_HPP
