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

#include "orthinv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace orthinv {

namespace {

const Scalar& zero_scalar() {
  static const Scalar zero;
  return zero;
}

const Poly& zero_poly() {
  static const Poly zero;
  return zero;
}

// "a/b" as "\frac{a}{b}", with the sign pulled out front.
std::string rational_latex(const Rational& r) {
  std::string out = r.sign() < 0 ? "-" : "";
  const Rational mag = r.sign() < 0 ? -r : r;
  if (mag.is_integer()) return out + mag.to_string();
  return out + "\\frac{" + mpz_class(mag.numerator()).get_str() + "}{" + mpz_class(mag.denominator()).get_str() + "}";
}

}  // namespace

Poly::Poly(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

Poly Poly::constant(Scalar c) { return Poly(std::vector<Scalar>{std::move(c)}); }

Poly Poly::x() { return Poly{Scalar(0), Scalar(1)}; }

Poly Poly::monomial(Scalar c, int k) {
  if (k < 0) throw std::invalid_argument("monomial with negative exponent");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = std::move(c);
  return Poly(std::move(coeffs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Poly::is_real() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_real(); });
}

const Scalar& Poly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_scalar(); }

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Scalar> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    if (lhs.coeffs_[a].is_zero()) continue;
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) {
      if (rhs.coeffs_[b].is_zero()) continue;
      out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
  }
  return Poly(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const Scalar& c) {
  if (c.is_zero()) throw DivisionByZero("polynomial divided by zero");
  for (auto& v : coeffs_) v /= c;
  return *this;
}

Poly operator-(Poly p) {
  for (auto& v : p.coeffs_) v = -v;
  return p;
}

Poly Poly::derivative(int order) const {
  if (order < 0) throw std::invalid_argument("negative derivative order");
  if (order > degree()) return {};
  std::vector<Scalar> out(coeffs_.size() - static_cast<std::size_t>(order));
  for (std::size_t k = 0; k < out.size(); ++k) {
    // k+order falling to k: (k+1)(k+2)...(k+order).
    Rational falling = pochhammer(Rational(static_cast<long>(k) + 1), order);
    out[k] = coeffs_[k + static_cast<std::size_t>(order)] * Scalar(std::move(falling));
  }
  return Poly(std::move(out));
}

Scalar Poly::eval(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Poly Poly::compose_linear(const Scalar& shift, const Scalar& scale) const {
  const Poly inner{shift, scale};
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += Poly::constant(*it);
  }
  return acc;
}

Poly Poly::conj() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.conj());
  return Poly(std::move(out));
}

Poly Poly::real_part() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.real());
  return Poly(std::move(out));
}

Poly Poly::imag_part() const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.emplace_back(c.imag());
  return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_real()) {
      negative = c.real().sign() < 0;
      body = (negative ? -c.real() : c.real()).to_string();
    } else {
      body = "(" + c.to_string() + ")";
    }
    if (first) {
      os << (negative ? "-" : "");
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << body;
      continue;
    }
    if (body != "1") os << body << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

Poly pow(const Poly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
  Poly result = Poly::constant(Scalar(1));
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

Poly pochhammer_poly(const Scalar& a0, const Scalar& a1, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer with negative length");
  if (a1.is_zero()) return Poly::constant(pochhammer(a0, n));
  Poly result = Poly::constant(Scalar(1));
  for (int m = 0; m < n; ++m) result *= Poly{a0 + Scalar(m), a1};
  return result;
}

std::string to_latex(const Scalar& c) {
  if (c.is_real()) return rational_latex(c.real());
  std::string imag = c.imag() == Rational(1) ? "i" : (c.imag() == Rational(-1) ? "-i" : rational_latex(c.imag()) + "i");
  if (c.real().is_zero()) return imag;
  return rational_latex(c.real()) + (c.imag().sign() > 0 ? "+" : "") + imag;
}

std::string to_latex(const Poly& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.coefficients().size(); k-- > 0;) {
    const Scalar& c = p[k];
    if (c.is_zero()) continue;
    std::string coeff = c.is_real() ? to_latex(c) : "\\left(" + to_latex(c) + "\\right)";
    const bool negative = c.is_real() && c.real().sign() < 0;
    if (!out.empty() && !negative) out += "+";
    if (k > 0) {
      if (coeff == "1") coeff.clear();
      if (coeff == "-1") coeff = "-";
      out += coeff;
      out += var;
      if (k > 1) out += "^{" + std::to_string(k) + "}";
    } else {
      out += coeff;
    }
  }
  return out;
}

char aux_var_name(AuxVar v) { return v == AuxVar::y ? 'y' : 'M'; }

BiPoly::BiPoly(AuxVar var, std::vector<Poly> coefficients) : var_(var), coeffs_(std::move(coefficients)) { trim(); }

BiPoly BiPoly::from_x(AuxVar var, Poly p) { return BiPoly(var, std::vector<Poly>{std::move(p)}); }

BiPoly BiPoly::from_aux(AuxVar var, const Poly& p) {
  std::vector<Poly> coeffs;
  coeffs.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) coeffs.push_back(Poly::constant(c));
  return BiPoly(var, std::move(coeffs));
}

BiPoly BiPoly::variable(AuxVar var) { return BiPoly(var, {Poly(), Poly::constant(Scalar(1))}); }

void BiPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void BiPoly::require_same_var(const BiPoly& other) const {
  if (var_ != other.var_) throw std::invalid_argument("bivariate operands use different auxiliary variables");
}

const Poly& BiPoly::operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_poly(); }

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  require_same_var(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  require_same_var(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

BiPoly& BiPoly::operator*=(const Poly& p) {
  for (auto& c : coeffs_) c *= p;
  trim();
  return *this;
}

BiPoly operator*(const BiPoly& lhs, const BiPoly& rhs) {
  lhs.require_same_var(rhs);
  if (lhs.is_zero() || rhs.is_zero()) return BiPoly(lhs.var_);
  std::vector<Poly> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t a = 0; a < lhs.coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < rhs.coeffs_.size(); ++b) out[a + b] += lhs.coeffs_[a] * rhs.coeffs_[b];
  }
  return BiPoly(lhs.var_, std::move(out));
}

BiPoly BiPoly::derivative_x(int order) const {
  std::vector<Poly> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.derivative(order));
  return BiPoly(var_, std::move(out));
}

Poly BiPoly::eval(const Scalar& at) const { return eval(Poly::constant(at)); }

Poly BiPoly::eval(const Poly& at) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

BiPoly pow(const BiPoly& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
  BiPoly result = BiPoly::from_x(base.var(), Poly::constant(Scalar(1)));
  for (int k = 0; k < exponent; ++k) result = result * base;
  return result;
}

}  // namespace orthinv
