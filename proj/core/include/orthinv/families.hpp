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

#ifndef ORTHINV_FAMILIES_HPP
#define ORTHINV_FAMILIES_HPP

#include <optional>

#include "orthinv/family_id.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

/// n-th member of a family from its explicit finite-sum formula.
///
/// Jacobi, Laguerre, Legendre and the Chebyshev families use their
/// hypergeometric sums; Gegenbauer is the normalized symmetric Jacobi
/// polynomial (2 lambda)_n / (lambda + 1/2)_n P_n^{(lambda-1/2, lambda-1/2)}.
/// Hermite, Charlier, Meixner and Meixner-Pollaczek are only defined through
/// generating functions, so their constructors are the coefficient
/// extractions of the products of binomial series those generating functions
/// factor into, e.g. the Charlier sum
///   C_n^{(a)}(x) = sum_k (-1)^k (-x)_k / k! * (-a)^{n-k} / (n-k)!.
/// The degree is n except at parameter degeneracies.
Poly polynomial(Family family, int n, const ParamSet& params);

Poly jacobi(int n, const Rational& alpha, const Rational& beta);
Poly gegenbauer(int n, const Rational& lambda);
Poly chebyshev_t(int n);
Poly chebyshev_u(int n);
Poly legendre(int n);
Poly laguerre(int n, const Rational& alpha);
Poly hermite(int n);
Poly charlier(int n, const Rational& a);
Poly meixner(int n, const Rational& beta, const Rational& c);
Poly meixner_pollaczek(int n, const Rational& lambda, const GaussianRational& phase);

/// P_n^{(alpha, beta0 + beta1 x)}(at): a Jacobi polynomial evaluated at a
/// number whose second parameter is linear in x. The result is a polynomial
/// in x because every Pochhammer symbol in the explicit sum is.
Poly jacobi_linear_beta(int n, const Rational& alpha, const Rational& beta0, const Rational& beta1,
                        const Rational& at);

/// D^i p_n written as factor * (member `index` of `family` at `params`).
struct ShiftedDerivative {
  Scalar factor;
  Family family;
  int index = 0;
  ParamSet params;
  Poly value;
};

/// Derivative rules
///   D^i L_n^{(alpha)} = (-1)^i L_{n-i}^{(alpha+i)},
///   D^i H_n = H_{n-i},
///   D^i P_n^{(alpha,beta)} = (n+alpha+beta+1)_i / 2^i P_{n-i}^{(alpha+i,beta+i)}.
/// The Jacobi rule is the standard textbook one. Every result is checked
/// against direct differentiation of the explicit constructor. Returns
/// nullopt when i > n (the derivative is zero).
std::optional<ShiftedDerivative> derivative_shift(Family family, int n, int i, const ParamSet& params);

/// (1/sqrt(pi)) * integral of exp(-x^2) p(x) over the real line, computed
/// from the moments mu_{2k} = (1/2)_k, mu_{2k+1} = 0. Rejects polynomials
/// with non-real coefficients.
Rational hermite_moment_functional(const Poly& p);

enum class Relation { rel1, rel2, rel3 };

/// Checks one of the inter-family relations by building both sides through
/// independent routes:
///   rel1: G_n^{(lambda)} (generating function) against
///         (2 lambda)_n/(lambda+1/2)_n P_n^{(lambda-1/2,lambda-1/2)};
///   rel2: P_n (explicit Legendre sum) against G_n^{(1/2)} (generating function);
///   rel3: M_n^{(beta_m)}(x; c) (generating function) against
///         P_n^{(beta_m-1, -n-beta_m-x)}((2-c)/c).
/// Required params: rel1 {lambda}, rel2 {}, rel3 {beta_m, c}.
bool relation_check(Relation relation, int n, const ParamSet& params);

}  // namespace orthinv

#endif  // ORTHINV_FAMILIES_HPP
