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

#include "orthinv/trisolve.hpp"

#include <stdexcept>
#include <string>

#include "orthinv/families.hpp"

namespace orthinv {

namespace {

void require_supported(Family f) {
  if (f != Family::laguerre && f != Family::hermite && f != Family::jacobi) {
    throw std::invalid_argument("differential systems are defined for laguerre, hermite and jacobi, not " +
                                std::string(to_string(f)));
  }
}

}  // namespace

std::string_view to_string(SolveMethod m) { return m == SolveMethod::generic ? "generic" : "closed_form"; }

std::vector<Poly> apply_operator(Family family, const ParamSet& params, const std::vector<Poly>& coeffs) {
  require_supported(family);
  std::vector<Poly> out;
  const int size = static_cast<int>(coeffs.size());
  out.reserve(coeffs.size());
  for (int n = 1; n <= size; ++n) {
    const Poly p = polynomial(family, n, params);
    Poly acc;
    for (int i = 1; i <= n; ++i) acc += coeffs[static_cast<std::size_t>(i - 1)] * p.derivative(i);
    out.push_back(std::move(acc));
  }
  return out;
}

CoeffSolution solve_generic(const DiffSystem& system) {
  require_supported(system.family);
  validate_params(system.family, system.params);
  CoeffSolution out{{}, SolveMethod::generic};
  const int size = static_cast<int>(system.rhs.size());
  out.coeffs.reserve(system.rhs.size());
  for (int n = 1; n <= size; ++n) {
    const Poly p = polynomial(system.family, n, system.params);
    const Poly top = p.derivative(n);
    if (top.is_zero() || !top.is_constant()) {
      throw ParameterError("D^n p_n vanishes at n=" + std::to_string(n) + " for " + system.params.to_string());
    }
    Poly acc = system.rhs[static_cast<std::size_t>(n - 1)];
    for (int i = 1; i < n; ++i) acc -= out.coeffs[static_cast<std::size_t>(i - 1)] * p.derivative(i);
    out.coeffs.push_back(acc / top.constant_term());
  }
  return out;
}

CoeffSolution solve_closed_form(const DiffSystem& system) {
  require_supported(system.family);
  validate_params(system.family, system.params);
  CoeffSolution out{{}, SolveMethod::closed_form};
  const int size = static_cast<int>(system.rhs.size());
  const auto& rhs = system.rhs;
  const Scalar unit = Scalar::i();
  for (int i = 1; i <= size; ++i) {
    Poly acc;
    switch (system.family) {
      case Family::laguerre: {
        const Rational shifted = -*system.params.alpha - Rational(i + 1);
        for (int j = 1; j <= i; ++j) {
          acc += laguerre(i - j, shifted).compose_linear(Scalar(0), Scalar(-1)) * rhs[static_cast<std::size_t>(j - 1)];
        }
        if (i % 2 == 1) acc = -acc;
        break;
      }
      case Family::hermite: {
        for (int j = 1; j <= i; ++j) {
          const Poly kernel = hermite(i - j).compose_linear(Scalar(0), unit) * power(unit, i - j);
          acc += kernel * rhs[static_cast<std::size_t>(j - 1)];
        }
        if (!acc.imag_part().is_zero()) {
          throw std::logic_error("hermite closed form produced a non-real coefficient a_" + std::to_string(i));
        }
        break;
      }
      case Family::jacobi: {
        const Rational& alpha = *system.params.alpha;
        const Rational& beta = *system.params.beta;
        const Rational s = alpha + beta;
        for (int j = 1; j <= i; ++j) {
          const Rational denominator = pochhammer(s + Rational(j + 1), i + 1);
          if (denominator.is_zero()) {
            throw ParameterError("jacobi closed form pole: (alpha+beta+j+1)_{i+1} = 0 at i=" + std::to_string(i) +
                                 " j=" + std::to_string(j));
          }
          const Rational coeff = (s + Rational(2 * j + 1)) / denominator;
          acc += jacobi(i - j, -alpha - Rational(i + 1), -beta - Rational(i + 1)) * rhs[static_cast<std::size_t>(j - 1)] *
                 Scalar(coeff);
        }
        acc *= Scalar(power(Rational(2), i));
        break;
      }
      default:
        break;
    }
    out.coeffs.push_back(std::move(acc));
  }
  return out;
}

}  // namespace orthinv
