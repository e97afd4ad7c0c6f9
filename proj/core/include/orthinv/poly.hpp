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

#ifndef ORTHINV_POLY_HPP
#define ORTHINV_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "orthinv/exact.hpp"

namespace orthinv {

/// Dense univariate polynomial in x over Q(i). Coefficients are stored in
/// ascending degree with trailing zeros trimmed, so the zero polynomial has
/// no coefficients at all and equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coefficients);
  Poly(std::initializer_list<Scalar> coefficients);

  static Poly constant(Scalar c);
  static Poly x();
  /// c * x^k.
  static Poly monomial(Scalar c, int k);

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] bool is_real() const;

  /// Coefficient of x^k; zero beyond the degree.
  [[nodiscard]] const Scalar& operator[](std::size_t k) const;
  [[nodiscard]] std::span<const Scalar> coefficients() const { return coeffs_; }

  /// Constant term, zero for the zero polynomial.
  [[nodiscard]] const Scalar& constant_term() const { return (*this)[0]; }

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const Scalar& c);
  Poly& operator/=(const Scalar& c);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly p, const Scalar& c) { return p *= c; }
  friend Poly operator*(const Scalar& c, Poly p) { return p *= c; }
  friend Poly operator/(Poly p, const Scalar& c) { return p /= c; }
  friend Poly operator-(Poly p);

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// order-th derivative with respect to x.
  [[nodiscard]] Poly derivative(int order = 1) const;

  /// Horner evaluation.
  [[nodiscard]] Scalar eval(const Scalar& at) const;

  /// p(shift + scale * x).
  [[nodiscard]] Poly compose_linear(const Scalar& shift, const Scalar& scale) const;

  /// Coefficient-wise complex conjugate.
  [[nodiscard]] Poly conj() const;

  /// Coefficient-wise real and imaginary parts.
  [[nodiscard]] Poly real_part() const;
  [[nodiscard]] Poly imag_part() const;

  /// Human-readable form, e.g. "1/2*x^2 - 1/4".
  [[nodiscard]] std::string to_string(char var = 'x') const;

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

 private:
  void trim();

  std::vector<Scalar> coeffs_;
};

/// p^exponent for exponent >= 0.
Poly pow(const Poly& base, int exponent);

/// (a0 + a1 x)_n = prod_{m=0}^{n-1} (a0 + m + a1 x).
Poly pochhammer_poly(const Scalar& a0, const Scalar& a1, int n);

/// LaTeX rendering, e.g. "\frac{1}{2}x^{2}-\frac{1}{4}".
std::string to_latex(const Scalar& c);
std::string to_latex(const Poly& p, char var = 'x');

/// Auxiliary variable of a bivariate polynomial.
enum class AuxVar { y, M };

char aux_var_name(AuxVar v);

/// Polynomial in one auxiliary variable (y or M) with Poly-in-x coefficients,
/// trimmed in the auxiliary variable.
class BiPoly {
 public:
  explicit BiPoly(AuxVar var) : var_(var) {}
  BiPoly(AuxVar var, std::vector<Poly> coefficients);

  /// The x-polynomial p viewed as constant in the auxiliary variable.
  static BiPoly from_x(AuxVar var, Poly p);
  /// The polynomial p read in the auxiliary variable instead of x.
  static BiPoly from_aux(AuxVar var, const Poly& p);
  /// The auxiliary variable itself.
  static BiPoly variable(AuxVar var);

  [[nodiscard]] AuxVar var() const { return var_; }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of v^k; zero beyond the degree.
  [[nodiscard]] const Poly& operator[](std::size_t k) const;
  [[nodiscard]] std::span<const Poly> coefficients() const { return coeffs_; }

  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const Poly& p);

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs);
  friend BiPoly operator*(BiPoly b, const Poly& p) { return b *= p; }
  friend BiPoly operator*(const Poly& p, BiPoly b) { return b *= p; }

  friend bool operator==(const BiPoly& lhs, const BiPoly& rhs) {
    return lhs.var_ == rhs.var_ && lhs.coeffs_ == rhs.coeffs_;
  }

  /// Derivative in x, applied to each coefficient.
  [[nodiscard]] BiPoly derivative_x(int order = 1) const;

  /// Substitutes v = at, collapsing to a polynomial in x.
  [[nodiscard]] Poly eval(const Scalar& at) const;
  /// Substitutes v = p(x).
  [[nodiscard]] Poly eval(const Poly& at) const;

 private:
  void trim();
  void require_same_var(const BiPoly& other) const;

  AuxVar var_;
  std::vector<Poly> coeffs_;
};

BiPoly pow(const BiPoly& base, int exponent);

}  // namespace orthinv

#endif  // ORTHINV_POLY_HPP
