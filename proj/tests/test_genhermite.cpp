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

#include <gtest/gtest.h>

#include <random>

#include "orthinv/families.hpp"
#include "orthinv/genhermite.hpp"
#include "orthinv/trisolve.hpp"
#include "support.hpp"

namespace orthinv::genhermite {
namespace {

using test::poly;
using test::q;
using test::X;

Rational kernel_closed_form(int n) { return pochhammer(q(3, 2), n) / factorial(n); }

GenHermiteConfig random_config(std::mt19937_64& rng, int max_n) {
  GenHermiteConfig config;
  config.max_n = max_n;
  for (int k = 0; k < (max_n + 1) / 2; ++k) config.odd_alphas.push_back(test::random_rational(rng));
  return config;
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(2, Scalar(0)).eval(Scalar(0)), Scalar(q(3, 2)));
  EXPECT_EQ(kernel(0, Scalar(0)), Poly::constant(Scalar(1)));
  EXPECT_EQ(kernel(2, Scalar(0)), poly({q(3, 2), q(0), q(-1)}));
  EXPECT_THROW(kernel(-1, Scalar(0)), std::invalid_argument);
}

TEST(Kernel, DefiningSum) {
  const Scalar y0(q(2, 3));
  for (int n = 0; n <= 8; ++n) {
    Poly expected;
    for (int k = 0; k <= n; ++k) {
      expected += orthinv::hermite(k) * Scalar(power(q(2), k) * factorial(k)) * orthinv::hermite(k).eval(y0);
    }
    EXPECT_EQ(kernel(n, y0), expected) << n;
  }
}

TEST(Kernel, OddIndexRepeatsEvenIndex) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(kernel(2 * n + 1, Scalar(0)), kernel(2 * n, Scalar(0))) << n;
}

TEST(Kernel, ValueAtOrigin) {
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(kernel(2 * n, Scalar(0)).eval(Scalar(0)), Scalar(kernel_closed_form(n))) << n;
}

TEST(QCoefficients, Examples) {
  EXPECT_EQ(q_coefficient(2, 2), q(1));
  EXPECT_EQ(q_coefficient(2, 0), q(1, 4));
  EXPECT_EQ(q_coefficient(3, 1), q(0));
  EXPECT_EQ(q_coefficient(3, 3), q(3, 2));
  for (int k = 0; k < 3; ++k) EXPECT_EQ(q_coefficient(3, k), q(0));
  EXPECT_THROW(q_coefficient(0, 0), std::out_of_range);
  EXPECT_THROW(q_coefficient(2, 3), std::out_of_range);
}

TEST(QPolynomials, SmallCases) {
  EXPECT_TRUE(q_polynomial(0).is_zero());
  EXPECT_EQ(q_polynomial(1), X());
  EXPECT_EQ(q_polynomial(2), poly({q(0), q(0), q(1, 2)}));
}

TEST(QPolynomials, OddIndexIsProportionalToHermite) {
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(q_polynomial(2 * n + 1), orthinv::hermite(2 * n + 1) * Scalar(kernel_closed_form(n))) << n;
  }
}

TEST(QPolynomials, DeterminantFormMatchesExpansion) {
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(q_polynomial_determinant(n), q_polynomial(n)) << n;
}

TEST(Eigenvalues, EvenSequence) {
  EXPECT_EQ(alpha_even(0), q(0));
  EXPECT_EQ(alpha_even(1), q(4));
  EXPECT_EQ(alpha_even(2), q(10));
  for (int m = 1; m <= 20; ++m) {
    EXPECT_EQ(alpha_even(m), Rational(4) * pochhammer(q(5, 2), m - 1) / factorial(m - 1)) << m;
  }
}

TEST(Eigenvalues, OddValuesComeFromConfig) {
  GenHermiteConfig config;
  config.max_n = 3;
  config.odd_alphas = {q(1, 2), q(-3)};
  EXPECT_EQ(alpha(1, config), q(1, 2));
  EXPECT_EQ(alpha(3, config), q(-3));
  EXPECT_EQ(alpha(2, config), q(4));
  EXPECT_THROW(alpha(5, config), std::out_of_range);
}

TEST(RightHandSides, Examples) {
  const auto defaults = GenHermiteConfig::with_defaults(4);
  EXPECT_TRUE(defaults.is_default());
  EXPECT_TRUE(rhs_F(1, defaults).is_zero());
  EXPECT_EQ(rhs_F(2, defaults), poly({q(0), q(0), q(-2)}));
  GenHermiteConfig config;
  config.max_n = 3;
  config.odd_alphas = {q(0), q(1)};
  EXPECT_FALSE(config.is_default());
  EXPECT_EQ(rhs_F(3, config), -orthinv::hermite(3));
  GenHermiteConfig short_config;
  short_config.max_n = 5;
  short_config.odd_alphas = {q(0)};
  EXPECT_THROW(rhs_F(3, short_config), std::out_of_range);
  EXPECT_THROW(rhs_F(0, defaults), std::out_of_range);
}

TEST(DeCoefficients, DefaultValues) {
  const auto c = de_coefficients(GenHermiteConfig::with_defaults(4));
  ASSERT_EQ(c.a.size(), 4U);
  EXPECT_TRUE(c.a[0].is_zero());
  EXPECT_EQ(c.a[1], poly({q(0), q(0), q(-2)}));
  EXPECT_EQ(c.a[2], poly({q(0), q(0), q(0), q(2)}));
  EXPECT_EQ(c.a[3], poly({q(0), q(0), q(5, 8), q(0), q(-17, 12)}));
  EXPECT_TRUE(c.degree_bound_holds);
}

TEST(DeCoefficients, DegreeBoundUnderDefaults) {
  const auto c = de_coefficients(GenHermiteConfig::with_defaults(12));
  EXPECT_TRUE(c.degree_bound_holds);
  for (std::size_t k = 0; k < c.a.size(); ++k) {
    EXPECT_LE(c.a[k].degree(), static_cast<int>(k + 1));
    EXPECT_TRUE(c.a[k].is_real());
  }
}

TEST(DeCoefficients, TooFewOddAlphasRejected) {
  GenHermiteConfig config;
  config.max_n = 4;
  config.odd_alphas = {q(1)};
  EXPECT_THROW((void)de_coefficients(config), std::invalid_argument);
}

TEST(DeCoefficients, MatchGenericSolver) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 4; ++trial) {
    const auto config = trial == 0 ? GenHermiteConfig::with_defaults(10) : random_config(rng, 10);
    const auto model = build_model(config);
    const auto generic = solve_generic({Family::hermite, {}, model.f_polys});
    EXPECT_EQ(generic.coeffs, model.coefficients.a);
  }
}

TEST(Model, Invariants) {
  std::mt19937_64 rng(93);
  const auto model = build_model(random_config(rng, 9));
  EXPECT_TRUE(model.q_polys[0].is_zero());
  EXPECT_EQ(model.alphas[0], q(0));
  EXPECT_EQ(model.q_polys.size(), 10U);
  EXPECT_EQ(model.f_polys.size(), 9U);
  EXPECT_TRUE(model.q[0].empty());
  for (int n = 1; n <= 9; ++n) EXPECT_EQ(model.q[static_cast<std::size_t>(n)].size(), static_cast<std::size_t>(n + 1));
  for (const auto& a : model.coefficients.a) EXPECT_TRUE(a.is_real());
}

TEST(DifferentialEquation, SmallCases) {
  const auto model = build_model(GenHermiteConfig::with_defaults(2));
  for (int n = 0; n <= 2; ++n) {
    const auto r = verify_de(n, model);
    EXPECT_TRUE(r.m0().is_zero());
    EXPECT_TRUE(r.m1().is_zero());
    EXPECT_TRUE(r.m2().is_zero());
    EXPECT_TRUE(r.pass());
  }
  EXPECT_THROW(verify_de(3, model), std::out_of_range);
}

TEST(DifferentialEquation, DefaultAndRandomConfigs) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 4; ++trial) {
    const auto config = trial == 0 ? GenHermiteConfig::with_defaults(10) : random_config(rng, 10);
    const auto model = build_model(config);
    for (int n = 0; n <= 10; ++n) EXPECT_TRUE(verify_de(n, model).pass()) << "trial " << trial << " n=" << n;
  }
}

TEST(DifferentialEquation, DetectsWrongEigenvalue) {
  auto model = build_model(GenHermiteConfig::with_defaults(4));
  model.alphas[4] += q(1);
  const auto r = verify_de(4, model);
  EXPECT_FALSE(r.pass());
  EXPECT_TRUE(r.m0().is_zero());
  EXPECT_FALSE(r.m1().is_zero());
}

}  // namespace
}  // namespace orthinv::genhermite
