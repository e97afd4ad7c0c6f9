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

#ifndef ORTHINV_GENHERMITE_HPP
#define ORTHINV_GENHERMITE_HPP

#include <vector>

#include "orthinv/poly.hpp"

/// Hermite polynomials orthogonal for exp(-x^2)/sqrt(pi) + M delta(x), written
/// H_n^M = H_n + M Q_n, and the infinite-order differential equation
///
///   M sum_{k>=1} a_k(x) y^(k) + y'' - 2x y' + (2n + M alpha_n) y = 0
///
/// they satisfy. Coefficients are produced by feeding the right-hand sides
/// F_n into the Hermite inversion formula.
///
/// Worked n = 2 example (default configuration): F_1 = 0, F_2 = -2x^2, so
/// a_1 = 0 and a_2 = -2x^2. Q_2 = q_{2,2} H_2 + q_{2,0} H_0 = H_2 + 1/4 = x^2/2,
/// alpha_2 = 4. The M^1 coefficient is
///   a_2 H_0 + alpha_2 H_2 + Q_2'' - 2x Q_2' + 4 Q_2
///   = -2x^2 + (2x^2 - 1) + 1 - 2x^2 + 2x^2 = 0.
namespace orthinv::genhermite {

struct GenHermiteConfig {
  /// alpha_1, alpha_3, alpha_5, ...; these eigenvalue parameters are free.
  std::vector<Rational> odd_alphas;
  int max_n = 0;

  /// All odd alphas zero.
  static GenHermiteConfig with_defaults(int max_n);
  [[nodiscard]] bool is_default() const;
};

/// K_n(x, y0) = sum_{k=0}^{n} 2^k k! H_k(x) H_k(y0).
Poly kernel(int n, const Scalar& y0);

/// q_{n,n} = K_{n-1}(0,0), q_{n,k} = -2^k k! H_k(0) H_n(0) for k < n.
Rational q_coefficient(int n, int k);

/// Q_n = sum_k q_{n,k} H_k, Q_0 = 0.
Poly q_polynomial(int n);

/// Q_n from the determinant H_n(x) K_{n-1}(0,0) - K_{n-1}(x,0) H_n(0).
Poly q_polynomial_determinant(int n);

/// alpha_{2m}: the sum 4 sum_{j=1}^{m} q_{2j,2j}, checked against the closed
/// form 4 (5/2)_{m-1} / (m-1)!. alpha_0 = 0.
Rational alpha_even(int m);

/// alpha_n for n <= config.max_n.
Rational alpha(int n, const GenHermiteConfig& config);

/// F_{2m+1} = -alpha_{2m+1} H_{2m+1},
/// F_{2m}   = -alpha_{2m} H_{2m} - 4 sum_{k=0}^{m} (m-k) q_{2m,2k} H_{2k}.
Poly rhs_F(int n, const GenHermiteConfig& config);

struct DeCoefficients {
  std::vector<Poly> a;  // a[k-1] = a_k
  /// deg a_k <= k for every k.
  bool degree_bound_holds = true;
};

/// a_k for k = 1..max_n. Under the default configuration a violated degree
/// bound is an invariant failure (std::logic_error); otherwise it is only
/// reported.
DeCoefficients de_coefficients(const GenHermiteConfig& config);

struct GenHermiteModel {
  GenHermiteConfig config;
  std::vector<Poly> q_polys;                 // Q_0..Q_max
  std::vector<std::vector<Rational>> q;      // q[n][k], row 0 empty
  std::vector<Rational> alphas;              // alpha_0..alpha_max
  std::vector<Poly> f_polys;                 // F_1..F_max at index n-1
  DeCoefficients coefficients;
};

GenHermiteModel build_model(const GenHermiteConfig& config);

/// The left side of the equation for y = H_n + M Q_n as a polynomial in M.
struct DeResidual {
  int n = 0;
  BiPoly expansion{AuxVar::M};
  [[nodiscard]] const Poly& m0() const { return expansion[0]; }
  [[nodiscard]] const Poly& m1() const { return expansion[1]; }
  [[nodiscard]] const Poly& m2() const { return expansion[2]; }
  [[nodiscard]] bool pass() const { return expansion.is_zero(); }
};

DeResidual verify_de(int n, const GenHermiteModel& model);

}  // namespace orthinv::genhermite

#endif  // ORTHINV_GENHERMITE_HPP
