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

#ifndef ORTHINV_INVERSION_HPP
#define ORTHINV_INVERSION_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orthinv/family_id.hpp"
#include "orthinv/poly.hpp"
#include "orthinv/series.hpp"

namespace orthinv {

/// Square lower-triangular matrix of polynomials with 1-based indexing.
/// Entries above the diagonal are implicitly zero.
class LowerTriPolyMatrix {
 public:
  explicit LowerTriPolyMatrix(int size);

  static LowerTriPolyMatrix identity(int size);

  [[nodiscard]] int size() const { return size_; }

  /// Entry (i, j); zero when j > i.
  [[nodiscard]] const Poly& operator()(int i, int j) const;
  /// Mutable entry (i, j) with 1 <= j <= i <= size.
  Poly& at(int i, int j);

  [[nodiscard]] bool has_unit_diagonal() const;

  friend LowerTriPolyMatrix operator*(const LowerTriPolyMatrix& lhs, const LowerTriPolyMatrix& rhs);
  friend bool operator==(const LowerTriPolyMatrix&, const LowerTriPolyMatrix&) = default;

 private:
  [[nodiscard]] std::size_t offset(int i, int j) const;

  int size_;
  std::vector<Poly> entries_;  // packed rows
};

/// Inverse by forward substitution. The diagonal must consist of nonzero
/// constants; A * A^{-1} = A^{-1} * A = I is checked before returning.
LowerTriPolyMatrix invert_triangular(const LowerTriPolyMatrix& a);

/// How a matrix entry's parameters and normalization depend on its position.
/// Offsets are affine in the 0-based row r = i-1 and column c = j-1.
struct AffineShift {
  Rational row;
  Rational col;
};

enum class EntryWeight {
  none,
  /// (alpha' + beta' + 1)_{i-j}, with the entry's shifted Jacobi parameters.
  jacobi_column,
  /// (2 alpha' + 1)_{i-j} / (alpha' + 1)_{i-j}: the Gegenbauer normalization
  /// of a symmetric Jacobi polynomial at lambda = alpha' + 1/2.
  ultraspherical,
};

struct ShiftRule {
  AffineShift alpha;
  AffineShift beta;
  AffineShift lambda;
  EntryWeight weight = EntryWeight::none;
};

/// entry(i, j) = weight * p_{i-j} at the shifted parameters. A pole at any
/// entry throws ParameterError naming (i, j).
LowerTriPolyMatrix build_matrix(Family family, const ParamSet& params, int size, const ShiftRule& rule = {});

enum class IdentityId {
  charlier_inv,
  laguerre_inv,
  laguerre_inv_plain,
  jacobi_inv,
  jacobi_two_var,
  jacobi_from_meixner,
  jacobi_from_ultra,
  ultra_inv,
  meixner_inv,
  mp_inv_reflect,
  mp_inv_phase,
  hermite_conv,
  legendre_limit_inverse,
  chebU_banded_inverse,
  chebT_inverse,
  legendre_conv_u,
  chebT_geom_conv,
  chebU_recurrence,
  chebTU_relation,
};

inline constexpr std::array<IdentityId, 19> kAllIdentities{
    IdentityId::charlier_inv,        IdentityId::laguerre_inv,         IdentityId::laguerre_inv_plain,
    IdentityId::jacobi_inv,          IdentityId::jacobi_two_var,       IdentityId::jacobi_from_meixner,
    IdentityId::jacobi_from_ultra,   IdentityId::ultra_inv,            IdentityId::meixner_inv,
    IdentityId::mp_inv_reflect,      IdentityId::mp_inv_phase,         IdentityId::hermite_conv,
    IdentityId::legendre_limit_inverse, IdentityId::chebU_banded_inverse, IdentityId::chebT_inverse,
    IdentityId::legendre_conv_u,     IdentityId::chebT_geom_conv,      IdentityId::chebU_recurrence,
    IdentityId::chebTU_relation,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> identity_from_string(std::string_view name);

/// Matrix identities assert that a closed-form matrix inverts a family
/// matrix; the others are convolution or recurrence identities in n.
bool is_matrix_identity(IdentityId id);

/// Parameters the identity is stated in. An empty set means the identity is
/// parameter free.
struct IdentityParams {
  bool alpha = false, beta = false, lambda = false, a = false, c = false, beta_m = false, phase = false;
};
IdentityParams identity_params(IdentityId id);

/// The family matrix T whose inverse the identity describes.
struct MatrixSpec {
  Family family;
  ParamSet params;
  ShiftRule rule;
};
MatrixSpec matrix_spec(IdentityId id, const ParamSet& params);

/// Closed-form entry u_{ij} (1-based, j <= i) of T^{-1}.
///
/// The formulas are stated in the 0-based indices r = i-1, c = j-1, m = r-c.
/// jacobi_inv is normalized so both factors have unit diagonal: with
/// s = alpha + beta,
///   t_{rc} = (s+2c+1)_m P_m^{(alpha+c, beta+c)}(x),
///   u_{rc} = (s+2c+1) (s+r+c+1)_m / (s+r+c+1) P_m^{(-alpha-r-1, -beta-r-1)}(x),
/// which is the triple-index inversion sum after moving the Gamma-function
/// factors Gamma(s+k+j+1), Gamma(s+k+i+2) into the two matrices.
Poly closed_form_inverse_entry(IdentityId id, int i, int j, const ParamSet& params);

/// The closed-form inverse as a matrix.
LowerTriPolyMatrix closed_form_inverse(IdentityId id, const ParamSet& params, int size);

/// Summand factor of the Jacobi inversion sum in its unnormalized form
/// (0-based i, j, k with j <= k <= i):
///   (s+2k+1) / (s+k+j+1)_{i-j+1} * P_{i-k}^{(-alpha-i-1, -beta-i-1)}(x).
Poly jacobi_inv_left_factor(int i, int j, int k, const ParamSet& params);

/// Summand factor of the two-variable Jacobi identity, as a polynomial in y:
///   (s+2k+1) / (s+k+1)_{n+1} * P_{n-k}^{(-n-alpha-1, -n-beta-1)}(y).
BiPoly jacobi_two_var_left_factor(int n, int k, const ParamSet& params);

/// Left side minus right side of
///   sum_k (s+2k+1)/(s+k+1)_{n+1} P_k^{(alpha,beta)}(x) P_{n-k}^{(-n-alpha-1,-n-beta-1)}(y)
///     = ((x - y)/2)^n / n!.
BiPoly jacobi_two_var_residual(int n, const ParamSet& params);

/// Product of the Laguerre generating functions
///   (1-t)^{-alpha-j-1} exp(xt/(t-1)) * (1-t)^{alpha+i} exp(-xt/(t-1)),
/// which must equal (1-t)^{i-j-1}.
TruncSeries laguerre_generating_product(int i, int j, const Rational& alpha, int order);

struct Counterexample {
  int i = 0;
  int j = 0;
  ParamSet params;
  Poly residual;
  std::string diagnostic;
};

struct VerificationReport {
  IdentityId identity;
  int size = 0;
  std::vector<ParamSet> samples;
  /// Highest-degree nonzero residual seen; zero on pass.
  Poly residual;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  std::chrono::milliseconds elapsed{0};
};

/// Checks the identity at every sample.
///
/// Matrix identities: T is built, inverted by forward substitution and the
/// result compared with the closed form entrywise; the product
/// sum_k u_{ik} t_{kj} = delta_{ij} is checked as well.
/// Convolution identities: both sides compared for n = 0..size.
/// Failures (including unexpected poles) are reported, never thrown.
VerificationReport verify_identity(IdentityId id, int size, std::span<const ParamSet> samples);

struct SamplingOptions {
  int count = 20;
  std::uint64_t seed = 0;
  /// Replace random draws by a grid with more points per parameter than the
  /// identity's degree bound 2*size + 2 in that parameter.
  bool pit = false;
};

/// Deterministic parameter samples for an identity, skipping points in the
/// identity's pole set. Parameter-free identities get a single empty set.
std::vector<ParamSet> draw_samples(IdentityId id, int size, const SamplingOptions& options);

/// Whether a sample lies off the identity's pole set at this size.
bool admissible(IdentityId id, int size, const ParamSet& params);

}  // namespace orthinv

#endif  // ORTHINV_INVERSION_HPP
