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

#ifndef ORTHINV_FAMILY_ID_HPP
#define ORTHINV_FAMILY_ID_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orthinv/exact.hpp"

namespace orthinv {

enum class Family {
  jacobi,
  gegenbauer,
  chebyshev_t,
  chebyshev_u,
  legendre,
  laguerre,
  hermite,
  charlier,
  meixner,
  meixner_pollaczek,
};

inline constexpr std::array<Family, 10> kAllFamilies{
    Family::jacobi,   Family::gegenbauer, Family::chebyshev_t, Family::chebyshev_u, Family::legendre,
    Family::laguerre, Family::hermite,    Family::charlier,    Family::meixner,     Family::meixner_pollaczek,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Thrown when a parameter set violates a family's requirements or hits a
/// pole (a vanishing Pochhammer denominator). The message names the failing
/// invariant.
class ParameterError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Family parameters. Only the ones a family needs may be present:
///   jacobi {alpha, beta}, gegenbauer {lambda}, laguerre {alpha},
///   charlier {a}, meixner {beta_m, c}, meixner_pollaczek {lambda, phase};
/// chebyshev_t, chebyshev_u, legendre and hermite take none.
/// `phase` stands for e^{i phi} and must satisfy phase * conj(phase) = 1.
struct ParamSet {
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<Rational> lambda;
  std::optional<Rational> a;
  std::optional<Rational> c;
  std::optional<Rational> beta_m;
  std::optional<GaussianRational> phase;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;

  /// Compact text form, e.g. "alpha=1/3 beta=-1/4".
  [[nodiscard]] std::string to_string() const;
};

/// Default Meixner-Pollaczek phase (3+4i)/5, from the triple (3, 4, 5).
GaussianRational default_phase();

/// Checks presence/absence of parameters and the pole-free conditions that
/// do not depend on the index.
void validate_params(Family f, const ParamSet& params);

/// Fetches a required parameter or throws ParameterError naming it.
const Rational& require(const std::optional<Rational>& value, std::string_view name);

}  // namespace orthinv

#endif  // ORTHINV_FAMILY_ID_HPP
