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

#ifndef ORTHINV_TESTS_SUPPORT_HPP
#define ORTHINV_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "orthinv/exact.hpp"
#include "orthinv/family_id.hpp"
#include "orthinv/poly.hpp"

namespace orthinv::test {

inline Rational q(long num, long den = 1) { return Rational(num, den); }

inline Poly poly(std::initializer_list<Rational> coeffs) {
  std::vector<Scalar> values;
  for (const auto& c : coeffs) values.emplace_back(c);
  return Poly(std::move(values));
}

inline Poly X() { return Poly::x(); }

inline Rational random_rational(std::mt19937_64& rng, long bound = 50) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline Scalar random_gaussian(std::mt19937_64& rng) { return {random_rational(rng), random_rational(rng)}; }

inline Poly random_poly(std::mt19937_64& rng, int degree, bool complex = false) {
  std::vector<Scalar> values;
  for (int k = 0; k <= degree; ++k) values.push_back(complex ? random_gaussian(rng) : Scalar(random_rational(rng)));
  return Poly(std::move(values));
}

inline GaussianRational random_phase(std::mt19937_64& rng) {
  static constexpr long kTriples[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {7, 24, 25}, {20, 21, 29}};
  const auto& t = kTriples[rng() % 5];
  const long re = (rng() % 2 == 0) ? t[0] : -t[0];
  const long im = (rng() % 2 == 0) ? t[1] : -t[1];
  return {Rational(re, t[2]), Rational(im, t[2])};
}

/// Parameters valid for `f` at every degree up to `max_n`.
inline ParamSet random_family_params(Family f, std::mt19937_64& rng, int max_n) {
  ParamSet p;
  switch (f) {
    case Family::jacobi:
      p.alpha = random_rational(rng);
      p.beta = random_rational(rng);
      break;
    case Family::gegenbauer:
    case Family::meixner_pollaczek:
      for (;;) {
        const Rational lambda = random_rational(rng);
        const Rational shifted = lambda + Rational(1, 2);
        const bool pole = shifted.is_integer() && shifted.sign() <= 0 && shifted > Rational(-max_n);
        if (!lambda.is_zero() && !pole) {
          p.lambda = lambda;
          break;
        }
      }
      if (f == Family::meixner_pollaczek) p.phase = random_phase(rng);
      break;
    case Family::laguerre:
      p.alpha = random_rational(rng);
      break;
    case Family::charlier:
      p.a = random_rational(rng);
      break;
    case Family::meixner:
      p.beta_m = random_rational(rng);
      do {
        p.c = random_rational(rng);
      } while (p.c->is_zero());
      break;
    default:
      break;
  }
  return p;
}

}  // namespace orthinv::test

#endif  // ORTHINV_TESTS_SUPPORT_HPP
