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

#include "orthinv/genhermite.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "orthinv/families.hpp"
#include "orthinv/trisolve.hpp"

namespace orthinv::genhermite {

namespace {

Rational hermite_at_zero(int n) { return hermite(n).constant_term().real(); }

// 2^k k!, the reciprocal squared norm with respect to the Hermite weight.
Rational inverse_norm(int k) { return power(Rational(2), k) * factorial(k); }

}  // namespace

GenHermiteConfig GenHermiteConfig::with_defaults(int max_n) {
  GenHermiteConfig config;
  config.max_n = max_n;
  config.odd_alphas.assign(static_cast<std::size_t>((max_n + 1) / 2), Rational(0));
  return config;
}

bool GenHermiteConfig::is_default() const {
  return std::all_of(odd_alphas.begin(), odd_alphas.end(), [](const Rational& a) { return a.is_zero(); });
}

Poly kernel(int n, const Scalar& y0) {
  if (n < 0) throw std::invalid_argument("kernel index must be nonnegative");
  Poly out;
  for (int k = 0; k <= n; ++k) {
    const Poly h = hermite(k);
    out += h * (h.eval(y0) * Scalar(inverse_norm(k)));
  }
  return out;
}

Rational q_coefficient(int n, int k) {
  if (n < 1 || k < 0 || k > n) throw std::out_of_range("q_coefficient needs 1 <= n and 0 <= k <= n");
  if (k == n) return kernel(n - 1, Scalar(0)).constant_term().real();
  return -inverse_norm(k) * hermite_at_zero(k) * hermite_at_zero(n);
}

Poly q_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("Q index must be nonnegative");
  Poly out;
  if (n == 0) return out;
  for (int k = 0; k <= n; ++k) out += hermite(k) * Scalar(q_coefficient(n, k));
  return out;
}

Poly q_polynomial_determinant(int n) {
  if (n < 1) throw std::invalid_argument("determinant form needs n >= 1");
  const Poly kernel_x = kernel(n - 1, Scalar(0));
  return hermite(n) * kernel_x.constant_term() - kernel_x * Scalar(hermite_at_zero(n));
}

Rational alpha_even(int m) {
  if (m < 0) throw std::invalid_argument("alpha_even index must be nonnegative");
  if (m == 0) return Rational(0);
  // lambda_{2j} - lambda_{2j-2} = 4 with lambda_n = 2n.
  Rational sum;
  for (int j = 1; j <= m; ++j) sum += Rational(4) * q_coefficient(2 * j, 2 * j);
  const Rational closed = Rational(4) * pochhammer(Rational(5, 2), m - 1) / factorial(m - 1);
  if (sum != closed) {
    throw std::logic_error("alpha_" + std::to_string(2 * m) + ": sum " + sum.to_string() + " != closed form " +
                           closed.to_string());
  }
  return sum;
}

Rational alpha(int n, const GenHermiteConfig& config) {
  if (n < 0) throw std::invalid_argument("alpha index must be nonnegative");
  if (n % 2 == 0) return alpha_even(n / 2);
  const auto slot = static_cast<std::size_t>(n / 2);
  if (slot >= config.odd_alphas.size()) {
    throw std::out_of_range("alpha_" + std::to_string(n) + " is not configured (" +
                            std::to_string(config.odd_alphas.size()) + " odd alphas given)");
  }
  return config.odd_alphas[slot];
}

Poly rhs_F(int n, const GenHermiteConfig& config) {
  if (n < 1) throw std::out_of_range("F index starts at 1");
  if (n % 2 == 1) return hermite(n) * Scalar(-alpha(n, config));
  const int m = n / 2;
  Poly out = hermite(n) * Scalar(-alpha(n, config));
  for (int k = 0; k <= m; ++k) {
    out -= hermite(2 * k) * Scalar(Rational(4 * (m - k)) * q_coefficient(n, 2 * k));
  }
  return out;
}

DeCoefficients de_coefficients(const GenHermiteConfig& config) {
  if (static_cast<int>(config.odd_alphas.size()) < (config.max_n + 1) / 2) {
    throw std::invalid_argument("need at least ceil(max_n/2) odd alphas");
  }
  DiffSystem system{Family::hermite, {}, {}};
  for (int n = 1; n <= config.max_n; ++n) system.rhs.push_back(rhs_F(n, config));
  DeCoefficients out;
  out.a = solve_closed_form(system).coeffs;
  for (std::size_t k = 0; k < out.a.size(); ++k) {
    if (out.a[k].degree() > static_cast<int>(k) + 1) out.degree_bound_holds = false;
  }
  if (!out.degree_bound_holds && config.is_default()) {
    throw std::logic_error("deg a_k <= k violated under the default configuration");
  }
  return out;
}

GenHermiteModel build_model(const GenHermiteConfig& config) {
  GenHermiteModel model;
  model.config = config;
  model.q.resize(static_cast<std::size_t>(config.max_n) + 1);
  for (int n = 0; n <= config.max_n; ++n) {
    model.q_polys.push_back(q_polynomial(n));
    model.alphas.push_back(alpha(n, config));
    if (n >= 1) {
      for (int k = 0; k <= n; ++k) model.q[static_cast<std::size_t>(n)].push_back(q_coefficient(n, k));
      model.f_polys.push_back(rhs_F(n, config));
    }
  }
  model.coefficients = de_coefficients(config);
  return model;
}

DeResidual verify_de(int n, const GenHermiteModel& model) {
  if (n < 0 || n > model.config.max_n) throw std::out_of_range("verify_de index outside the model");
  const BiPoly y(AuxVar::M, {hermite(n), model.q_polys[static_cast<std::size_t>(n)]});
  const BiPoly mvar = BiPoly::variable(AuxVar::M);
  const Poly x = Poly::x();

  // D^k y vanishes for k > n, so the operator sum stops at n.
  BiPoly operator_sum(AuxVar::M);
  for (int k = 1; k <= n; ++k) {
    operator_sum += y.derivative_x(k) * model.coefficients.a[static_cast<std::size_t>(k - 1)];
  }
  const BiPoly eigen(AuxVar::M, {Poly::constant(Scalar(2 * n)),
                                 Poly::constant(Scalar(model.alphas[static_cast<std::size_t>(n)]))});
  DeResidual out;
  out.n = n;
  out.expansion = mvar * operator_sum + y.derivative_x(2) - y.derivative_x(1) * (x * Scalar(2)) + eigen * y;
  return out;
}

}  // namespace orthinv::genhermite
