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

#include "orthinv/families.hpp"

#include <string>
#include <utility>
#include <vector>

#include "orthinv/series.hpp"

namespace orthinv {

namespace {

constexpr std::array<std::string_view, 10> kFamilyNames{
    "jacobi",   "gegenbauer", "chebyshev_t", "chebyshev_u", "legendre",
    "laguerre", "hermite",    "charlier",    "meixner",     "meixner_pollaczek",
};

struct Requirement {
  bool alpha = false, beta = false, lambda = false, a = false, c = false, beta_m = false, phase = false;
};

Requirement requirement_of(Family f) {
  Requirement r;
  switch (f) {
    case Family::jacobi: r.alpha = r.beta = true; break;
    case Family::gegenbauer: r.lambda = true; break;
    case Family::laguerre: r.alpha = true; break;
    case Family::charlier: r.a = true; break;
    case Family::meixner: r.beta_m = r.c = true; break;
    case Family::meixner_pollaczek: r.lambda = r.phase = true; break;
    default: break;
  }
  return r;
}

template <typename T>
void check_presence(Family f, const std::optional<T>& value, bool required, std::string_view name) {
  if (required && !value) {
    throw ParameterError(std::string(to_string(f)) + " requires parameter " + std::string(name));
  }
  if (!required && value) {
    throw ParameterError(std::string(to_string(f)) + " does not take parameter " + std::string(name));
  }
}

// ((x - 1)/2)^k.
Poly half_shifted_power(int k) { return pow(Poly{Scalar(Rational(-1, 2)), Scalar(Rational(1, 2))}, k); }

// ((1 - x)/2)^k.
Poly half_reflected_power(int k) { return pow(Poly{Scalar(Rational(1, 2)), Scalar(Rational(-1, 2))}, k); }

// 2F1(-n, b; c; (1-x)/2), terminating.
Poly terminating_2f1(int n, const Rational& b, const Rational& c) {
  Poly out;
  for (int k = 0; k <= n; ++k) {
    const Rational coeff = pochhammer(Rational(-n), k) * pochhammer(b, k) / (pochhammer(c, k) * factorial(k));
    out += half_reflected_power(k) * Scalar(coeff);
  }
  return out;
}

void require_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("polynomial index must be nonnegative");
}

}  // namespace

std::string_view to_string(Family f) { return kFamilyNames.at(static_cast<std::size_t>(f)); }

std::optional<Family> family_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kFamilyNames.size(); ++k) {
    if (kFamilyNames[k] == name) return static_cast<Family>(k);
  }
  return std::nullopt;
}

std::string ParamSet::to_string() const {
  std::string out;
  auto add = [&out](std::string_view name, const std::string& v) {
    if (!out.empty()) out += ' ';
    out += std::string(name) + "=" + v;
  };
  if (alpha) add("alpha", alpha->to_string());
  if (beta) add("beta", beta->to_string());
  if (lambda) add("lambda", lambda->to_string());
  if (a) add("a", a->to_string());
  if (c) add("c", c->to_string());
  if (beta_m) add("beta_m", beta_m->to_string());
  if (phase) add("phase", phase->to_string());
  return out;
}

GaussianRational default_phase() { return {Rational(3, 5), Rational(4, 5)}; }

const Rational& require(const std::optional<Rational>& value, std::string_view name) {
  if (!value) throw ParameterError("missing parameter " + std::string(name));
  return *value;
}

void validate_params(Family f, const ParamSet& p) {
  const Requirement r = requirement_of(f);
  check_presence(f, p.alpha, r.alpha, "alpha");
  check_presence(f, p.beta, r.beta, "beta");
  check_presence(f, p.lambda, r.lambda, "lambda");
  check_presence(f, p.a, r.a, "a");
  check_presence(f, p.c, r.c, "c");
  check_presence(f, p.beta_m, r.beta_m, "beta_m");
  check_presence(f, p.phase, r.phase, "phase");
  if (f == Family::meixner && p.c->is_zero()) throw ParameterError("meixner requires c != 0");
  if (f == Family::gegenbauer && p.lambda->is_zero()) {
    throw ParameterError("gegenbauer requires lambda != 0 (use chebyshev_t)");
  }
  if (f == Family::meixner_pollaczek && p.phase->norm() != Rational(1)) {
    throw ParameterError("meixner_pollaczek requires phase * conj(phase) = 1, got " + p.phase->to_string());
  }
}

Poly jacobi(int n, const Rational& alpha, const Rational& beta) {
  require_nonnegative(n);
  Poly out;
  const Rational top = Rational(n) + alpha + beta + Rational(1);
  for (int k = 0; k <= n; ++k) {
    const Rational coeff = pochhammer(top, k) / factorial(k) * pochhammer(alpha + Rational(k + 1), n - k) /
                           factorial(n - k);
    out += half_shifted_power(k) * Scalar(coeff);
  }
  return out;
}

Poly jacobi_linear_beta(int n, const Rational& alpha, const Rational& beta0, const Rational& beta1,
                        const Rational& at) {
  require_nonnegative(n);
  Poly out;
  const Rational base = (at - Rational(1)) / Rational(2);
  const Scalar top0 = Scalar(Rational(n) + alpha + beta0 + Rational(1));
  for (int k = 0; k <= n; ++k) {
    const Rational scalar_part =
        pochhammer(alpha + Rational(k + 1), n - k) / (factorial(k) * factorial(n - k)) * power(base, k);
    out += pochhammer_poly(top0, Scalar(beta1), k) * Scalar(scalar_part);
  }
  return out;
}

Poly gegenbauer(int n, const Rational& lambda) {
  require_nonnegative(n);
  if (lambda.is_zero()) throw ParameterError("gegenbauer requires lambda != 0 (use chebyshev_t)");
  const Rational half = Rational(1, 2);
  const Rational denominator = pochhammer(lambda + half, n);
  if (denominator.is_zero()) {
    throw ParameterError("gegenbauer pole: (lambda+1/2)_" + std::to_string(n) + " = 0 at lambda=" + lambda.to_string());
  }
  const Rational shifted = lambda - half;
  return jacobi(n, shifted, shifted) * Scalar(pochhammer(Rational(2) * lambda, n) / denominator);
}

Poly chebyshev_t(int n) {
  require_nonnegative(n);
  return terminating_2f1(n, Rational(n), Rational(1, 2));
}

Poly chebyshev_u(int n) {
  require_nonnegative(n);
  return terminating_2f1(n, Rational(n + 2), Rational(3, 2)) * Scalar(n + 1);
}

Poly legendre(int n) {
  require_nonnegative(n);
  Poly out;
  for (int k = 0; k <= n; ++k) {
    const Rational coeff = factorial(n + k) / (factorial(n - k) * factorial(k) * factorial(k));
    out += half_shifted_power(k) * Scalar(coeff);
  }
  return out;
}

Poly laguerre(int n, const Rational& alpha) {
  require_nonnegative(n);
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    Rational coeff = pochhammer(alpha + Rational(k + 1), n - k) / (factorial(n - k) * factorial(k));
    coeffs[static_cast<std::size_t>(k)] = Scalar(k % 2 == 0 ? coeff : -coeff);
  }
  return Poly(std::move(coeffs));
}

Poly hermite(int n) {
  require_nonnegative(n);
  // exp(xt) exp(-t^2/4): H_n = sum_k (-1/4)^k x^{n-2k} / (k! (n-2k)!).
  std::vector<Scalar> coeffs(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    coeffs[static_cast<std::size_t>(n - 2 * k)] =
        Scalar(power(Rational(-1, 4), k) / (factorial(k) * factorial(n - 2 * k)));
  }
  return Poly(std::move(coeffs));
}

Poly charlier(int n, const Rational& a) {
  require_nonnegative(n);
  // (1+t)^x = sum_k (-1)^k (-x)_k t^k / k!, e^{-at} = sum_m (-a)^m t^m / m!.
  Poly out;
  for (int k = 0; k <= n; ++k) {
    Rational coeff = power(-a, n - k) / (factorial(k) * factorial(n - k));
    if (k % 2 == 1) coeff = -coeff;
    out += pochhammer_poly(Scalar(0), Scalar(-1), k) * Scalar(coeff);
  }
  return out;
}

Poly meixner(int n, const Rational& beta, const Rational& c) {
  require_nonnegative(n);
  if (c.is_zero()) throw ParameterError("meixner requires c != 0");
  // (1 - t/c)^x = sum_j (-x)_j (t/c)^j / j!, (1-t)^{-x-beta} = sum_m (x+beta)_m t^m / m!.
  Poly out;
  const Rational inv_c = Rational(1) / c;
  for (int j = 0; j <= n; ++j) {
    const Rational coeff = power(inv_c, j) / (factorial(j) * factorial(n - j));
    out += pochhammer_poly(Scalar(0), Scalar(-1), j) * pochhammer_poly(Scalar(beta), Scalar(1), n - j) *
           Scalar(coeff);
  }
  return out;
}

Poly meixner_pollaczek(int n, const Rational& lambda, const GaussianRational& phase) {
  require_nonnegative(n);
  // (1 - e t)^{-lambda+ix} = sum_j (lambda - ix)_j (e t)^j / j!, and the
  // conjugate factor with (lambda + ix)_m (conj(e) t)^m / m!.
  const Scalar i = Scalar::i();
  const GaussianRational phase_bar = phase.conj();
  Poly out;
  for (int j = 0; j <= n; ++j) {
    const Scalar coeff =
        power(phase, j) * power(phase_bar, n - j) / Scalar(factorial(j) * factorial(n - j));
    out += pochhammer_poly(Scalar(lambda), -i, j) * pochhammer_poly(Scalar(lambda), i, n - j) * coeff;
  }
  if (!out.is_real()) {
    throw std::logic_error("meixner_pollaczek produced a non-real polynomial; phase must be unimodular");
  }
  return out;
}

Poly polynomial(Family family, int n, const ParamSet& params) {
  validate_params(family, params);
  switch (family) {
    case Family::jacobi: return jacobi(n, *params.alpha, *params.beta);
    case Family::gegenbauer: return gegenbauer(n, *params.lambda);
    case Family::chebyshev_t: return chebyshev_t(n);
    case Family::chebyshev_u: return chebyshev_u(n);
    case Family::legendre: return legendre(n);
    case Family::laguerre: return laguerre(n, *params.alpha);
    case Family::hermite: return hermite(n);
    case Family::charlier: return charlier(n, *params.a);
    case Family::meixner: return meixner(n, *params.beta_m, *params.c);
    case Family::meixner_pollaczek: return meixner_pollaczek(n, *params.lambda, *params.phase);
  }
  throw std::invalid_argument("unknown family");
}

std::optional<ShiftedDerivative> derivative_shift(Family family, int n, int i, const ParamSet& params) {
  if (i < 0) throw std::invalid_argument("negative derivative order");
  validate_params(family, params);
  if (i > n) return std::nullopt;
  ShiftedDerivative out{Scalar(1), family, n - i, params, Poly()};
  switch (family) {
    case Family::laguerre:
      out.factor = Scalar(i % 2 == 0 ? 1 : -1);
      out.params.alpha = *params.alpha + Rational(i);
      break;
    case Family::hermite:
      break;
    case Family::jacobi: {
      const Rational top = Rational(n) + *params.alpha + *params.beta + Rational(1);
      out.factor = Scalar(pochhammer(top, i) / power(Rational(2), i));
      out.params.alpha = *params.alpha + Rational(i);
      out.params.beta = *params.beta + Rational(i);
      break;
    }
    default:
      throw std::invalid_argument("derivative_shift supports laguerre, hermite and jacobi only");
  }
  out.value = polynomial(family, out.index, out.params) * out.factor;
  if (out.value != polynomial(family, n, params).derivative(i)) {
    throw std::logic_error("derivative rule disagrees with direct differentiation for " +
                           std::string(to_string(family)) + " n=" + std::to_string(n) + " i=" + std::to_string(i));
  }
  return out;
}

Rational hermite_moment_functional(const Poly& p) {
  if (!p.is_real()) throw std::invalid_argument("hermite moment functional needs real coefficients");
  Rational out;
  for (int k = 0; 2 * k <= p.degree(); ++k) {
    out += p[static_cast<std::size_t>(2 * k)].real() * pochhammer(Rational(1, 2), k);
  }
  return out;
}

bool relation_check(Relation relation, int n, const ParamSet& params) {
  switch (relation) {
    case Relation::rel1: {
      const Rational& lambda = require(params.lambda, "lambda");
      const Poly left = expand_generating_function(Family::gegenbauer, params, n)[n];
      const Rational half = Rational(1, 2);
      const Rational denominator = pochhammer(lambda + half, n);
      if (denominator.is_zero()) throw ParameterError("rel1 pole: (lambda+1/2)_n = 0");
      const Poly right =
          jacobi(n, lambda - half, lambda - half) * Scalar(pochhammer(Rational(2) * lambda, n) / denominator);
      return left == right;
    }
    case Relation::rel2: {
      ParamSet half;
      half.lambda = Rational(1, 2);
      return legendre(n) == expand_generating_function(Family::gegenbauer, half, n)[n];
    }
    case Relation::rel3: {
      const Rational& beta = require(params.beta_m, "beta_m");
      const Rational& c = require(params.c, "c");
      const Poly left = expand_generating_function(Family::meixner, params, n)[n];
      const Poly right =
          jacobi_linear_beta(n, beta - Rational(1), Rational(-n) - beta, Rational(-1), (Rational(2) - c) / c);
      return left == right;
    }
  }
  return false;
}

}  // namespace orthinv
