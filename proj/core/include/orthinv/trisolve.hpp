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

#ifndef ORTHINV_TRISOLVE_HPP
#define ORTHINV_TRISOLVE_HPP

#include <string_view>
#include <vector>

#include "orthinv/family_id.hpp"
#include "orthinv/poly.hpp"

namespace orthinv {

/// The truncated system sum_{i=1}^{n} a_i(x) D^i p_n(x) = F_n(x), n = 1..N.
/// `rhs[n-1]` holds F_n. Supported families: laguerre, hermite, jacobi.
struct DiffSystem {
  Family family;
  ParamSet params;
  std::vector<Poly> rhs;
};

enum class SolveMethod { generic, closed_form };

std::string_view to_string(SolveMethod m);

/// `coeffs[i-1]` holds a_i.
struct CoeffSolution {
  std::vector<Poly> coeffs;
  SolveMethod method;
};

/// Forward substitution: a_n = (F_n - sum_{i<n} a_i D^i p_n) / D^n p_n, where
/// D^n p_n is a constant. Rejects (ParameterError) a vanishing constant,
/// naming n.
CoeffSolution solve_generic(const DiffSystem& system);

/// Closed forms:
///   laguerre: a_i = (-1)^i sum_j L_{i-j}^{(-alpha-i-1)}(-x) F_j,
///   hermite:  a_k = sum_j i^{k-j} H_{k-j}(ix) F_j, evaluated in Q(i); a
///             non-vanishing imaginary part raises std::logic_error,
///   jacobi:   c_i = 2^i sum_j (s+2j+1)/(s+j+1)_{i+1}
///                     P_{i-j}^{(-alpha-i-1,-beta-i-1)}(x) F_j, s = alpha+beta.
CoeffSolution solve_closed_form(const DiffSystem& system);

/// sum_{i=1}^{n} a_i D^i p_n for n = 1..coeffs.size(), i.e. the left-hand
/// sides the coefficients produce.
std::vector<Poly> apply_operator(Family family, const ParamSet& params, const std::vector<Poly>& coeffs);

}  // namespace orthinv

#endif  // ORTHINV_TRISOLVE_HPP
