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

#include "orthinv/series.hpp"

#include <string>
#include <utility>

namespace orthinv {

namespace {

Poly one() { return Poly::constant(Scalar(1)); }

// a + b t + c t^2 with polynomial coefficients.
TruncSeries quadratic(int order, Poly a, Poly b, Poly c) {
  return TruncSeries(order, {std::move(a), std::move(b), std::move(c)});
}

// 1 - 2xt + t^2.
TruncSeries chebyshev_denominator(int order) {
  return quadratic(order, one(), Poly::x() * Scalar(-2), one());
}

// 1 - c t.
TruncSeries one_minus(int order, const Scalar& c) {
  return TruncSeries(order, {one(), Poly::constant(-c)});
}

}  // namespace

TruncSeries::TruncSeries(int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, std::vector<Poly> coefficients) : coeffs_(std::move(coefficients)) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries TruncSeries::constant(int order, Poly c) { return TruncSeries(order, {std::move(c)}); }

TruncSeries TruncSeries::monomial(int order, Poly c, int k) {
  TruncSeries s(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = std::move(c);
  return s;
}

void TruncSeries::require_same_order(const TruncSeries& other) const {
  if (order() != other.order()) {
    throw std::invalid_argument("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(other.order()));
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& rhs) {
  require_same_order(rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Poly& p) {
  for (auto& c : coeffs_) c *= p;
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Scalar& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& lhs, const TruncSeries& rhs) {
  lhs.require_same_order(rhs);
  const int n = lhs.order();
  TruncSeries out(n);
  for (int a = 0; a <= n; ++a) {
    if (lhs[a].is_zero()) continue;
    for (int b = 0; a + b <= n; ++b) {
      if (rhs[b].is_zero()) continue;
      out.coeffs_[static_cast<std::size_t>(a + b)] += lhs[a] * rhs[b];
    }
  }
  return out;
}

TruncSeries TruncSeries::inverse() const {
  const Poly& c0 = coeffs_.front();
  if (c0.is_zero() || !c0.is_constant()) {
    throw SeriesError("inverse requires a nonzero constant term, got " + c0.to_string());
  }
  const Scalar inv0 = Scalar(1) / c0.constant_term();
  const int n = order();
  TruncSeries out(n);
  out.coeffs_[0] = Poly::constant(inv0);
  for (int m = 1; m <= n; ++m) {
    Poly acc;
    for (int k = 1; k <= m; ++k) acc += coeffs_[static_cast<std::size_t>(k)] * out[m - k];
    out.coeffs_[static_cast<std::size_t>(m)] = -acc * inv0;
  }
  return out;
}

TruncSeries TruncSeries::exp() const {
  if (!coeffs_.front().is_zero()) {
    throw SeriesError("exp requires a zero constant term, got " + coeffs_.front().to_string());
  }
  // E' = S' E, i.e. m e_m = sum_{k=1}^m k s_k e_{m-k}.
  const int n = order();
  TruncSeries out(n);
  out.coeffs_[0] = one();
  for (int m = 1; m <= n; ++m) {
    Poly acc;
    for (int k = 1; k <= m; ++k) {
      if (coeffs_[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += coeffs_[static_cast<std::size_t>(k)] * out[m - k] * Scalar(k);
    }
    out.coeffs_[static_cast<std::size_t>(m)] = acc / Scalar(m);
  }
  return out;
}

TruncSeries TruncSeries::log() const {
  if (coeffs_.front() != one()) {
    throw SeriesError("log requires constant term 1, got " + coeffs_.front().to_string());
  }
  // S L' = S', i.e. m l_m = m s_m - sum_{k=1}^{m-1} k l_k s_{m-k}.
  const int n = order();
  TruncSeries out(n);
  for (int m = 1; m <= n; ++m) {
    Poly acc = coeffs_[static_cast<std::size_t>(m)] * Scalar(m);
    for (int k = 1; k < m; ++k) {
      if (out[k].is_zero()) continue;
      acc -= out[k] * coeffs_[static_cast<std::size_t>(m - k)] * Scalar(k);
    }
    out.coeffs_[static_cast<std::size_t>(m)] = acc / Scalar(m);
  }
  return out;
}

TruncSeries TruncSeries::pow(const Scalar& gamma) const {
  if (coeffs_.front() != one()) {
    throw SeriesError("pow requires constant term 1, got " + coeffs_.front().to_string());
  }
  return (log() * gamma).exp();
}

TruncSeries TruncSeries::pow(const Poly& exponent) const {
  if (coeffs_.front() != one()) {
    throw SeriesError("pow requires constant term 1, got " + coeffs_.front().to_string());
  }
  return (log() * exponent).exp();
}

TruncSeries expand_generating_function(Family family, const ParamSet& params, int order) {
  validate_params(family, params);
  const Poly x = Poly::x();
  switch (family) {
    case Family::jacobi: {
      const Rational& alpha = require(params.alpha, "alpha");
      const Rational& beta = require(params.beta, "beta");
      const TruncSeries root = chebyshev_denominator(order).pow(Scalar(Rational(1, 2)));
      const TruncSeries left = (TruncSeries(order, {one(), Poly::constant(Scalar(-1))}) + root) * Scalar(Rational(1, 2));
      const TruncSeries right = (TruncSeries(order, {one(), one()}) + root) * Scalar(Rational(1, 2));
      return root.inverse() * left.pow(Scalar(-alpha)) * right.pow(Scalar(-beta));
    }
    case Family::gegenbauer: {
      const Rational& lambda = require(params.lambda, "lambda");
      return chebyshev_denominator(order).pow(Scalar(-lambda));
    }
    case Family::chebyshev_t:
      return TruncSeries(order, {one(), -x}) * chebyshev_denominator(order).inverse();
    case Family::chebyshev_u:
      return chebyshev_denominator(order).inverse();
    case Family::legendre:
      return chebyshev_denominator(order).pow(Scalar(Rational(-1, 2)));
    case Family::laguerre: {
      // (1-t)^{-alpha-1} exp(xt/(t-1)), with xt/(t-1) = -x t (1-t)^{-1}.
      const Rational& alpha = require(params.alpha, "alpha");
      const TruncSeries base = one_minus(order, Scalar(1));
      const TruncSeries argument = TruncSeries::monomial(order, -x, 1) * base.inverse();
      return base.pow(Scalar(-alpha - Rational(1))) * argument.exp();
    }
    case Family::hermite:
      return quadratic(order, Poly(), x, Poly::constant(Scalar(Rational(-1, 4)))).exp();
    case Family::charlier: {
      const Rational& a = require(params.a, "a");
      const TruncSeries exponent =
          TruncSeries::monomial(order, Poly::constant(Scalar(-a)), 1) + one_minus(order, Scalar(-1)).log() * x;
      return exponent.exp();
    }
    case Family::meixner: {
      const Rational& beta = require(params.beta_m, "beta_m");
      const Rational& c = require(params.c, "c");
      const TruncSeries exponent = one_minus(order, Scalar(Rational(1) / c)).log() * x +
                                   one_minus(order, Scalar(1)).log() * (-x - Poly::constant(Scalar(beta)));
      return exponent.exp();
    }
    case Family::meixner_pollaczek: {
      const Rational& lambda = require(params.lambda, "lambda");
      const Scalar& phase = *params.phase;
      const Poly ix = x * Scalar::i();
      const Poly lam = Poly::constant(Scalar(lambda));
      const TruncSeries exponent = one_minus(order, phase).log() * (ix - lam) +
                                   one_minus(order, phase.conj()).log() * (-ix - lam);
      return exponent.exp();
    }
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace orthinv
