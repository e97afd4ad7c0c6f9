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

#include "orthinv/exact.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace orthinv {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

// Accepts an optional sign followed by "p" or "p/q".
bool well_formed_rational(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return all_digits(text);
  return all_digits(text.substr(0, slash)) && all_digits(text.substr(slash + 1));
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (!well_formed_rational(text)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  std::string buffer(text.front() == '+' ? text.substr(1) : text);
  mpq_class v;
  if (v.set_str(buffer, 10) != 0) throw ParseError("not a rational number: '" + std::string(text) + "'");
  if (v.get_den() == 0) throw DivisionByZero("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  value_ /= rhs.value_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  if (rhs.im_.is_zero()) {
    re_ /= rhs.re_;
    im_ /= rhs.re_;
    return *this;
  }
  const Rational n = rhs.norm();
  *this *= rhs.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag = im_.to_string() + "*i";
  if (re_.is_zero()) return imag;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (const auto comma = text.find(','); comma != std::string_view::npos) {
    return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
  }
  if (!text.ends_with("*i")) return {Rational::parse(text)};
  const std::string_view body = text.substr(0, text.size() - 2);
  // The split point is the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), Rational::parse(body)};
  return {Rational::parse(body.substr(0, split)), Rational::parse(body.substr(split))};
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative integer");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mutex);
  while (static_cast<int>(table.size()) <= n) {
    table.push_back(table.back() * Rational(static_cast<long>(table.size())));
  }
  return table[static_cast<std::size_t>(n)];
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer with negative length");
  if (n == 0) return Rational(1);
  thread_local std::map<std::pair<Rational, int>, Rational> cache;
  auto key = std::make_pair(a, n);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  Rational product(1);
  Rational term = a;
  for (int m = 0; m < n; ++m) {
    product *= term;
    term += Rational(1);
  }
  if (cache.size() > 8192) cache.clear();
  cache.emplace(std::move(key), product);
  return product;
}

GaussianRational pochhammer(const GaussianRational& a, int n) {
  if (a.is_real()) return pochhammer(a.real(), n);
  if (n < 0) throw std::invalid_argument("pochhammer with negative length");
  GaussianRational product(1);
  GaussianRational term = a;
  for (int m = 0; m < n; ++m) {
    product *= term;
    term += GaussianRational(1);
  }
  return product;
}

Rational power(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / power(base, -exponent);
  Rational result(1);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

GaussianRational power(const GaussianRational& base, int exponent) {
  if (exponent < 0) return GaussianRational(1) / power(base, -exponent);
  GaussianRational result(1);
  for (int k = 0; k < exponent; ++k) result *= base;
  return result;
}

}  // namespace orthinv
