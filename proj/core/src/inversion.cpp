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

#include "orthinv/inversion.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "orthinv/families.hpp"

namespace orthinv {

namespace {

constexpr std::array<std::string_view, 19> kIdentityNames{
    "charlier_inv",        "laguerre_inv",         "laguerre_inv_plain", "jacobi_inv",
    "jacobi_two_var",      "jacobi_from_meixner",  "jacobi_from_ultra",  "ultra_inv",
    "meixner_inv",         "mp_inv_reflect",       "mp_inv_phase",       "hermite_conv",
    "legendre_limit_inverse", "chebU_banded_inverse", "chebT_inverse",   "legendre_conv_u",
    "chebT_geom_conv",     "chebU_recurrence",     "chebTU_relation",
};

Poly reflect(const Poly& p) { return p.compose_linear(Scalar(0), Scalar(-1)); }

Rational shifted(const std::optional<Rational>& base, const AffineShift& s, int row, int col) {
  return *base + s.row * Rational(row) + s.col * Rational(col);
}

std::string at_entry(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

Poly one() { return Poly::constant(Scalar(1)); }

// Integer test used by the pole predicates.
bool integer_in(const Rational& v, long lo, long hi) {
  return v.is_integer() && v >= Rational(lo) && v <= Rational(hi);
}

struct SampleOutcome {
  bool pass = true;
  Poly worst;  // highest-degree residual over the sample
  std::optional<Counterexample> counterexample;
};

void record(SampleOutcome& out, int i, int j, const ParamSet& params, const Poly& residual, std::string diagnostic) {
  if (residual.is_zero()) return;
  if (residual.degree() > out.worst.degree()) out.worst = residual;
  if (out.pass) {
    out.pass = false;
    out.counterexample = Counterexample{i, j, params, residual, std::move(diagnostic)};
  }
}

SampleOutcome check_matrix_identity(IdentityId id, int size, const ParamSet& params) {
  SampleOutcome out;
  const MatrixSpec spec = matrix_spec(id, params);
  const LowerTriPolyMatrix t = build_matrix(spec.family, spec.params, size, spec.rule);
  if (!t.has_unit_diagonal()) {
    record(out, 0, 0, params, one(), "family matrix does not have unit diagonal");
    return out;
  }
  const LowerTriPolyMatrix computed = invert_triangular(t);
  const LowerTriPolyMatrix closed = closed_form_inverse(id, params, size);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= i; ++j) {
      record(out, i, j, params, closed(i, j) - computed(i, j), "closed-form entry differs from computed inverse");
    }
  }
  const LowerTriPolyMatrix product = closed * t;
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= i; ++j) {
      record(out, i, j, params, product(i, j) - (i == j ? one() : Poly()), "sum_k u_ik t_kj != delta_ij");
    }
  }
  if (id == IdentityId::jacobi_inv) {
    // Unnormalized triple-index form, 0-based.
    const Rational& alpha = *params.alpha;
    const Rational& beta = *params.beta;
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j <= i; ++j) {
        Poly sum;
        for (int k = j; k <= i; ++k) {
          sum += jacobi_inv_left_factor(i, j, k, params) * jacobi(k - j, alpha + Rational(j), beta + Rational(j));
        }
        record(out, i + 1, j + 1, params, sum - (i == j ? one() : Poly()), "unnormalized Jacobi inversion sum");
      }
    }
  }
  return out;
}

SampleOutcome check_convolution_identity(IdentityId id, int size, const ParamSet& params) {
  SampleOutcome out;
  const Poly x = Poly::x();
  const Scalar i_unit = Scalar::i();
  for (int n = 0; n <= size; ++n) {
    Poly residual;
    switch (id) {
      case IdentityId::legendre_conv_u:
        for (int k = 0; k <= n; ++k) residual += legendre(k) * legendre(n - k);
        residual -= chebyshev_u(n);
        break;
      case IdentityId::chebT_geom_conv:
        for (int k = 0; k <= n; ++k) residual += pow(x, k) * chebyshev_t(n - k);
        residual -= chebyshev_u(n);
        break;
      case IdentityId::hermite_conv:
        for (int k = 0; k <= n; ++k) {
          residual += hermite(k) * hermite(n - k).compose_linear(Scalar(0), i_unit) * power(i_unit, n - k);
        }
        if (n == 0) residual -= one();
        break;
      case IdentityId::chebU_recurrence:
        residual = chebyshev_u(n) - x * chebyshev_u(n + 1) * Scalar(2) + chebyshev_u(n + 2);
        break;
      case IdentityId::chebTU_relation:
        residual = (one() - x * x) * chebyshev_u(n) - x * chebyshev_t(n + 1) + chebyshev_t(n + 2);
        break;
      case IdentityId::jacobi_two_var: {
        const BiPoly r = jacobi_two_var_residual(n, params);
        for (int k = 0; k <= r.degree(); ++k) {
          if (!r[static_cast<std::size_t>(k)].is_zero()) {
            residual = r[static_cast<std::size_t>(k)];
            record(out, n, 0, params, residual, "two-variable identity, coefficient of y^" + std::to_string(k));
            break;
          }
        }
        residual = Poly();
        break;
      }
      default:
        throw std::logic_error("not a convolution identity");
    }
    record(out, n, 0, params, residual, "convolution residual at n=" + std::to_string(n));
  }
  if (id == IdentityId::jacobi_two_var) {
    // y = x with alpha+j, beta+j and n = i-j must reproduce the Jacobi
    // inversion summands exactly.
    for (int i = 0; i <= size; ++i) {
      for (int j = 0; j <= i; ++j) {
        ParamSet moved = params;
        moved.alpha = *params.alpha + Rational(j);
        moved.beta = *params.beta + Rational(j);
        for (int k = j; k <= i; ++k) {
          const Poly specialized = jacobi_two_var_left_factor(i - j, k - j, moved).eval(x);
          record(out, i, j, params, specialized - jacobi_inv_left_factor(i, j, k, params),
                 "y=x specialization differs from Jacobi inversion factor at k=" + std::to_string(k));
        }
      }
    }
  }
  return out;
}

SampleOutcome check_sample(IdentityId id, int size, const ParamSet& params) {
  try {
    return is_matrix_identity(id) ? check_matrix_identity(id, size, params)
                                  : check_convolution_identity(id, size, params);
  } catch (const std::exception& e) {
    SampleOutcome out;
    out.pass = false;
    out.counterexample = Counterexample{0, 0, params, Poly(), e.what()};
    return out;
  }
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  const long p = num(rng);
  const long q = den(rng);
  return Rational(p, q);
}

GaussianRational random_phase(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> m_dist(2, 12);
  const long m = m_dist(rng);
  std::uniform_int_distribution<long> n_dist(1, m - 1);
  const long n = n_dist(rng);
  std::uniform_int_distribution<int> sign(0, 1);
  const long h = m * m + n * n;
  Rational re(m * m - n * n, h);
  Rational im(2 * m * n, h);
  if (sign(rng) != 0) re = -re;
  if (sign(rng) != 0) im = -im;
  return {re, im};
}

ParamSet random_params(const IdentityParams& need, std::mt19937_64& rng) {
  ParamSet p;
  if (need.alpha) p.alpha = random_rational(rng);
  if (need.beta) p.beta = random_rational(rng);
  if (need.lambda) p.lambda = random_rational(rng);
  if (need.a) p.a = random_rational(rng);
  if (need.c) p.c = random_rational(rng);
  if (need.beta_m) p.beta_m = random_rational(rng);
  if (need.phase) p.phase = random_phase(rng);
  return p;
}

// One axis of the identity-testing grid: `points` distinct values.
std::vector<Rational> grid_axis(int points, long offset_den) {
  std::vector<Rational> axis;
  axis.reserve(static_cast<std::size_t>(points));
  for (int k = 0; k < points; ++k) axis.push_back(Rational(k - points / 2) + Rational(1, offset_den));
  return axis;
}

std::vector<GaussianRational> phase_axis(int points) {
  std::vector<GaussianRational> axis;
  for (long m = 2; static_cast<int>(axis.size()) < points; ++m) {
    axis.emplace_back(Rational(m * m - 1, m * m + 1), Rational(2 * m, m * m + 1));
  }
  return axis;
}

std::vector<ParamSet> grid_params(const IdentityParams& need, int points) {
  std::vector<ParamSet> grid{ParamSet{}};
  auto extend = [&grid](auto&& assign, const auto& axis) {
    std::vector<ParamSet> next;
    next.reserve(grid.size() * axis.size());
    for (const auto& base : grid) {
      for (const auto& v : axis) {
        ParamSet p = base;
        assign(p, v);
        next.push_back(std::move(p));
      }
    }
    grid = std::move(next);
  };
  if (need.alpha) extend([](ParamSet& p, const Rational& v) { p.alpha = v; }, grid_axis(points, 3));
  if (need.beta) extend([](ParamSet& p, const Rational& v) { p.beta = v; }, grid_axis(points, 5));
  if (need.lambda) extend([](ParamSet& p, const Rational& v) { p.lambda = v; }, grid_axis(points, 7));
  if (need.a) extend([](ParamSet& p, const Rational& v) { p.a = v; }, grid_axis(points, 11));
  if (need.c) extend([](ParamSet& p, const Rational& v) { p.c = v; }, grid_axis(points, 13));
  if (need.beta_m) extend([](ParamSet& p, const Rational& v) { p.beta_m = v; }, grid_axis(points, 17));
  if (need.phase) extend([](ParamSet& p, const GaussianRational& v) { p.phase = v; }, phase_axis(points));
  return grid;
}

bool parameter_free(const IdentityParams& need) {
  return !(need.alpha || need.beta || need.lambda || need.a || need.c || need.beta_m || need.phase);
}

}  // namespace

LowerTriPolyMatrix::LowerTriPolyMatrix(int size) : size_(size) {
  if (size < 1) throw std::invalid_argument("matrix size must be positive");
  entries_.resize(static_cast<std::size_t>(size) * static_cast<std::size_t>(size + 1) / 2);
}

LowerTriPolyMatrix LowerTriPolyMatrix::identity(int size) {
  LowerTriPolyMatrix m(size);
  for (int i = 1; i <= size; ++i) m.at(i, i) = one();
  return m;
}

std::size_t LowerTriPolyMatrix::offset(int i, int j) const {
  if (i < 1 || i > size_ || j < 1 || j > i) {
    throw std::out_of_range("lower-triangular index " + at_entry(i, j) + " outside size " + std::to_string(size_));
  }
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(i - 1) / 2 + static_cast<std::size_t>(j - 1);
}

const Poly& LowerTriPolyMatrix::operator()(int i, int j) const {
  static const Poly zero;
  if (j > i && j <= size_ && i >= 1) return zero;
  return entries_[offset(i, j)];
}

Poly& LowerTriPolyMatrix::at(int i, int j) { return entries_[offset(i, j)]; }

bool LowerTriPolyMatrix::has_unit_diagonal() const {
  for (int i = 1; i <= size_; ++i) {
    if ((*this)(i, i) != one()) return false;
  }
  return true;
}

LowerTriPolyMatrix operator*(const LowerTriPolyMatrix& lhs, const LowerTriPolyMatrix& rhs) {
  if (lhs.size() != rhs.size()) throw std::invalid_argument("matrix sizes differ");
  LowerTriPolyMatrix out(lhs.size());
  for (int i = 1; i <= lhs.size(); ++i) {
    for (int j = 1; j <= i; ++j) {
      Poly acc;
      for (int k = j; k <= i; ++k) acc += lhs(i, k) * rhs(k, j);
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

LowerTriPolyMatrix invert_triangular(const LowerTriPolyMatrix& a) {
  const int n = a.size();
  std::vector<Scalar> inverse_diagonal;
  inverse_diagonal.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Poly& d = a(i, i);
    if (d.is_zero() || !d.is_constant()) {
      throw std::domain_error("diagonal entry " + at_entry(i, i) + " is not a nonzero constant: " + d.to_string());
    }
    inverse_diagonal.push_back(Scalar(1) / d.constant_term());
  }
  LowerTriPolyMatrix u(n);
  for (int j = 1; j <= n; ++j) {
    u.at(j, j) = Poly::constant(inverse_diagonal[static_cast<std::size_t>(j - 1)]);
    for (int i = j + 1; i <= n; ++i) {
      Poly acc;
      for (int k = j; k < i; ++k) acc += a(i, k) * u(k, j);
      u.at(i, j) = -acc * inverse_diagonal[static_cast<std::size_t>(i - 1)];
    }
  }
  const LowerTriPolyMatrix id = LowerTriPolyMatrix::identity(n);
  if (a * u != id || u * a != id) throw std::logic_error("forward substitution failed to invert the matrix");
  return u;
}

LowerTriPolyMatrix build_matrix(Family family, const ParamSet& params, int size, const ShiftRule& rule) {
  validate_params(family, params);
  LowerTriPolyMatrix m(size);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= i; ++j) {
      const int row = i - 1;
      const int col = j - 1;
      const int index = i - j;
      try {
        ParamSet entry = params;
        if (entry.alpha) entry.alpha = shifted(params.alpha, rule.alpha, row, col);
        if (entry.beta) entry.beta = shifted(params.beta, rule.beta, row, col);
        if (entry.lambda) entry.lambda = shifted(params.lambda, rule.lambda, row, col);
        Poly value = polynomial(family, index, entry);
        switch (rule.weight) {
          case EntryWeight::none: break;
          case EntryWeight::jacobi_column:
            value *= Scalar(pochhammer(*entry.alpha + *entry.beta + Rational(1), index));
            break;
          case EntryWeight::ultraspherical: {
            const Rational denominator = pochhammer(*entry.alpha + Rational(1), index);
            if (denominator.is_zero()) throw ParameterError("(alpha+1)_m vanishes");
            value *= Scalar(pochhammer(Rational(2) * *entry.alpha + Rational(1), index) / denominator);
            break;
          }
        }
        m.at(i, j) = std::move(value);
      } catch (const std::domain_error& e) {
        throw ParameterError("pole at entry " + at_entry(i, j) + ": " + e.what());
      }
    }
  }
  return m;
}

std::string_view to_string(IdentityId id) { return kIdentityNames.at(static_cast<std::size_t>(id)); }

std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (std::size_t k = 0; k < kIdentityNames.size(); ++k) {
    if (kIdentityNames[k] == name) return static_cast<IdentityId>(k);
  }
  return std::nullopt;
}

bool is_matrix_identity(IdentityId id) {
  switch (id) {
    case IdentityId::jacobi_two_var:
    case IdentityId::hermite_conv:
    case IdentityId::legendre_conv_u:
    case IdentityId::chebT_geom_conv:
    case IdentityId::chebU_recurrence:
    case IdentityId::chebTU_relation:
      return false;
    default:
      return true;
  }
}

IdentityParams identity_params(IdentityId id) {
  IdentityParams p;
  switch (id) {
    case IdentityId::charlier_inv: p.a = true; break;
    case IdentityId::laguerre_inv:
    case IdentityId::laguerre_inv_plain:
    case IdentityId::jacobi_from_ultra: p.alpha = true; break;
    case IdentityId::jacobi_inv:
    case IdentityId::jacobi_two_var:
    case IdentityId::jacobi_from_meixner: p.alpha = p.beta = true; break;
    case IdentityId::ultra_inv: p.lambda = true; break;
    case IdentityId::meixner_inv: p.beta_m = p.c = true; break;
    case IdentityId::mp_inv_reflect:
    case IdentityId::mp_inv_phase: p.lambda = p.phase = true; break;
    default: break;
  }
  return p;
}

MatrixSpec matrix_spec(IdentityId id, const ParamSet& params) {
  MatrixSpec spec{Family::legendre, params, {}};
  switch (id) {
    case IdentityId::charlier_inv: spec.family = Family::charlier; break;
    case IdentityId::laguerre_inv:
      spec.family = Family::laguerre;
      spec.rule.alpha.col = Rational(1);
      break;
    case IdentityId::laguerre_inv_plain: spec.family = Family::laguerre; break;
    case IdentityId::jacobi_inv:
      spec.family = Family::jacobi;
      spec.rule.alpha.col = Rational(1);
      spec.rule.beta.col = Rational(1);
      spec.rule.weight = EntryWeight::jacobi_column;
      break;
    case IdentityId::jacobi_from_meixner:
      spec.family = Family::jacobi;
      spec.rule.beta.row = Rational(-1);
      spec.rule.beta.col = Rational(1);
      break;
    case IdentityId::jacobi_from_ultra:
      spec.family = Family::jacobi;
      spec.params.beta = params.alpha;
      spec.rule.weight = EntryWeight::ultraspherical;
      break;
    case IdentityId::ultra_inv: spec.family = Family::gegenbauer; break;
    case IdentityId::meixner_inv: spec.family = Family::meixner; break;
    case IdentityId::mp_inv_reflect:
    case IdentityId::mp_inv_phase: spec.family = Family::meixner_pollaczek; break;
    case IdentityId::legendre_limit_inverse: spec.family = Family::legendre; break;
    case IdentityId::chebU_banded_inverse: spec.family = Family::chebyshev_u; break;
    case IdentityId::chebT_inverse: spec.family = Family::chebyshev_t; break;
    default:
      throw std::invalid_argument(std::string(to_string(id)) + " is not a matrix identity");
  }
  return spec;
}

Poly closed_form_inverse_entry(IdentityId id, int i, int j, const ParamSet& params) {
  if (j < 1 || j > i) throw std::out_of_range("closed-form entry needs 1 <= j <= i");
  const int row = i - 1;
  const int col = j - 1;
  const int m = row - col;
  const Poly x = Poly::x();
  switch (id) {
    case IdentityId::charlier_inv:
      return reflect(charlier(m, -require(params.a, "a")));
    case IdentityId::laguerre_inv:
      return reflect(laguerre(m, -require(params.alpha, "alpha") - Rational(row + 1)));
    case IdentityId::laguerre_inv_plain:
      return reflect(laguerre(m, -require(params.alpha, "alpha") - Rational(2)));
    case IdentityId::jacobi_inv: {
      const Rational& alpha = require(params.alpha, "alpha");
      const Rational& beta = require(params.beta, "beta");
      const Rational s = alpha + beta;
      const Rational base = s + Rational(row + col + 1);
      if (base.is_zero()) throw ParameterError("jacobi_inv pole: alpha+beta+r+c+1 = 0");
      const Rational coeff = (s + Rational(2 * col + 1)) * pochhammer(base, m) / base;
      return jacobi(m, -alpha - Rational(row + 1), -beta - Rational(row + 1)) * Scalar(coeff);
    }
    case IdentityId::jacobi_from_meixner: {
      const Rational& alpha = require(params.alpha, "alpha");
      const Rational& beta = require(params.beta, "beta");
      return jacobi(m, -alpha - Rational(2), -beta - Rational(row) + Rational(col));
    }
    case IdentityId::jacobi_from_ultra: {
      const Rational& alpha = require(params.alpha, "alpha");
      const Rational denominator = pochhammer(-alpha, m);
      if (denominator.is_zero()) throw ParameterError("jacobi_from_ultra pole: (-alpha)_m = 0");
      const Rational coeff = pochhammer(Rational(-2) * alpha - Rational(1), m) / denominator;
      return jacobi(m, -alpha - Rational(1), -alpha - Rational(1)) * Scalar(coeff);
    }
    case IdentityId::ultra_inv:
      return gegenbauer(m, -require(params.lambda, "lambda"));
    case IdentityId::meixner_inv:
      return reflect(meixner(m, -require(params.beta_m, "beta_m"), require(params.c, "c")));
    case IdentityId::mp_inv_reflect:
      if (!params.phase) throw ParameterError("missing parameter phase");
      return reflect(meixner_pollaczek(m, -require(params.lambda, "lambda"), *params.phase));
    case IdentityId::mp_inv_phase:
      if (!params.phase) throw ParameterError("missing parameter phase");
      return meixner_pollaczek(m, -require(params.lambda, "lambda"), params.phase->conj());
    case IdentityId::legendre_limit_inverse:
      if (m == 0) return one();
      if (m == 1) return -x;
      // B_m = (1/m)(1-x) P_{m-1}^{(1,-1)}(x).
      return (one() - x) * jacobi(m - 1, Rational(1), Rational(-1)) / Scalar(m);
    case IdentityId::chebU_banded_inverse:
      if (m == 0 || m == 2) return one();
      if (m == 1) return x * Scalar(-2);
      return {};
    case IdentityId::chebT_inverse:
      if (m == 0) return one();
      if (m == 1) return -x;
      return pow(x, m - 2) * (one() - x * x);
    default:
      throw std::invalid_argument(std::string(to_string(id)) + " is not a matrix identity");
  }
}

LowerTriPolyMatrix closed_form_inverse(IdentityId id, const ParamSet& params, int size) {
  LowerTriPolyMatrix u(size);
  for (int i = 1; i <= size; ++i) {
    for (int j = 1; j <= i; ++j) u.at(i, j) = closed_form_inverse_entry(id, i, j, params);
  }
  return u;
}

Poly jacobi_inv_left_factor(int i, int j, int k, const ParamSet& params) {
  if (!(0 <= j && j <= k && k <= i)) throw std::out_of_range("jacobi_inv_left_factor needs j <= k <= i");
  const Rational& alpha = require(params.alpha, "alpha");
  const Rational& beta = require(params.beta, "beta");
  const Rational s = alpha + beta;
  const Rational denominator = pochhammer(s + Rational(k + j + 1), i - j + 1);
  if (denominator.is_zero()) throw ParameterError("jacobi_inv pole: (s+k+j+1)_{i-j+1} = 0");
  return jacobi(i - k, -alpha - Rational(i + 1), -beta - Rational(i + 1)) *
         Scalar((s + Rational(2 * k + 1)) / denominator);
}

BiPoly jacobi_two_var_left_factor(int n, int k, const ParamSet& params) {
  if (!(0 <= k && k <= n)) throw std::out_of_range("jacobi_two_var_left_factor needs 0 <= k <= n");
  const Rational& alpha = require(params.alpha, "alpha");
  const Rational& beta = require(params.beta, "beta");
  const Rational s = alpha + beta;
  const Rational denominator = pochhammer(s + Rational(k + 1), n + 1);
  if (denominator.is_zero()) throw ParameterError("jacobi_two_var pole: (s+k+1)_{n+1} = 0");
  const Poly in_y = jacobi(n - k, -alpha - Rational(n + 1), -beta - Rational(n + 1)) *
                    Scalar((s + Rational(2 * k + 1)) / denominator);
  return BiPoly::from_aux(AuxVar::y, in_y);
}

BiPoly jacobi_two_var_residual(int n, const ParamSet& params) {
  const Rational& alpha = require(params.alpha, "alpha");
  const Rational& beta = require(params.beta, "beta");
  BiPoly left(AuxVar::y);
  for (int k = 0; k <= n; ++k) left += jacobi_two_var_left_factor(n, k, params) * jacobi(k, alpha, beta);
  const BiPoly half_difference =
      BiPoly(AuxVar::y, {Poly::x() * Scalar(Rational(1, 2)), Poly::constant(Scalar(Rational(-1, 2)))});
  const BiPoly right = pow(half_difference, n) * Poly::constant(Scalar(Rational(1) / factorial(n)));
  return left - right;
}

TruncSeries laguerre_generating_product(int i, int j, const Rational& alpha, int order) {
  const TruncSeries one_minus_t(order, {one(), Poly::constant(Scalar(-1))});
  // xt/(t-1) = -x t (1-t)^{-1}.
  const TruncSeries argument = TruncSeries::monomial(order, -Poly::x(), 1) * one_minus_t.inverse();
  const TruncSeries left = one_minus_t.pow(Scalar(-alpha - Rational(j + 1))) * argument.exp();
  const TruncSeries right = one_minus_t.pow(Scalar(alpha + Rational(i))) * (argument * Scalar(-1)).exp();
  return left * right;
}

VerificationReport verify_identity(IdentityId id, int size, std::span<const ParamSet> samples) {
  const auto start = std::chrono::steady_clock::now();
  if (size < 1) throw std::invalid_argument("verification size must be positive");
  VerificationReport report{id, size, std::vector<ParamSet>(samples.begin(), samples.end()), Poly(), true,
                            std::nullopt, std::chrono::milliseconds(0)};

  std::vector<SampleOutcome> outcomes(samples.size());
  const unsigned workers =
      std::max(1U, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(samples.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < samples.size(); ++k) outcomes[k] = check_sample(id, size, samples[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < samples.size(); k = next++) outcomes[k] = check_sample(id, size, samples[k]);
      });
    }
  }

  // Merged in sample order so the report is independent of scheduling.
  for (auto& outcome : outcomes) {
    if (outcome.worst.degree() > report.residual.degree()) report.residual = outcome.worst;
    if (!outcome.pass && report.pass) {
      report.pass = false;
      report.counterexample = std::move(outcome.counterexample);
    }
  }
  report.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

bool admissible(IdentityId id, int size, const ParamSet& p) {
  const long n = size;
  switch (id) {
    case IdentityId::jacobi_inv:
      return !integer_in(*p.alpha + *p.beta, -(2 * n + 2), -1);
    case IdentityId::jacobi_two_var:
      // The y = x cross-check shifts alpha + beta by up to 2 * size.
      return !integer_in(*p.alpha + *p.beta, -(4 * n + 4), -1);
    case IdentityId::jacobi_from_ultra:
      return !integer_in(*p.alpha, -n, n);
    case IdentityId::ultra_inv: {
      // lambda = 0 and lambda = +-1/2, +-3/2, ... make (+-lambda + 1/2)_m vanish.
      if (p.lambda->is_zero()) return false;
      const Rational twice = Rational(2) * *p.lambda;
      return !(twice.is_integer() && !p.lambda->is_integer() && integer_in(twice, -2 * n, 2 * n));
    }
    case IdentityId::meixner_inv:
      return !p.c->is_zero();
    default:
      return true;
  }
}

std::vector<ParamSet> draw_samples(IdentityId id, int size, const SamplingOptions& options) {
  const IdentityParams need = identity_params(id);
  if (parameter_free(need)) return {ParamSet{}};
  std::vector<ParamSet> out;
  if (options.pit) {
    for (auto& p : grid_params(need, 2 * size + 3)) {
      if (admissible(id, size, p)) out.push_back(std::move(p));
    }
    return out;
  }
  std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id) + 1);
  const int target = std::max(options.count, 0);
  for (int attempts = 0; static_cast<int>(out.size()) < target; ++attempts) {
    if (attempts > 1000 * (target + 1)) throw std::runtime_error("could not draw admissible samples");
    ParamSet p = random_params(need, rng);
    if (admissible(id, size, p)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace orthinv
