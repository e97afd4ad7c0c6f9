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

#include "json_io.hpp"

#include <stdexcept>
#include <string>

namespace orthinv::io {

Json to_json(const Scalar& c) { return c.to_string(); }

Json to_json(const Poly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"var", "x"}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const BiPoly& b) {
  Json coeffs = Json::array();
  for (const auto& c : b.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"var", std::string(1, aux_var_name(b.var()))}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const ParamSet& p) {
  Json out = Json::object();
  if (p.alpha) out["alpha"] = p.alpha->to_string();
  if (p.beta) out["beta"] = p.beta->to_string();
  if (p.lambda) out["lambda"] = p.lambda->to_string();
  if (p.a) out["a"] = p.a->to_string();
  if (p.c) out["c"] = p.c->to_string();
  if (p.beta_m) out["beta_m"] = p.beta_m->to_string();
  if (p.phase) out["phase"] = p.phase->to_string();
  return out;
}

Json to_json(const LowerTriPolyMatrix& m) {
  Json rows = Json::array();
  for (int i = 1; i <= m.size(); ++i) {
    Json row = Json::array();
    for (int j = 1; j <= i; ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json samples = Json::array();
  for (const auto& s : r.samples) samples.push_back(to_json(s));
  Json counterexample = nullptr;
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    counterexample = Json{{"i", c.i},
                          {"j", c.j},
                          {"params", to_json(c.params)},
                          {"residual", to_json(c.residual)},
                          {"diagnostic", c.diagnostic}};
  }
  Json out{{"identity", std::string(to_string(r.identity))},
           {"size", r.size},
           {"samples", std::move(samples)},
           {"status", r.pass ? "pass" : "fail"},
           {"counterexample", std::move(counterexample)}};
  out["elapsed_ms"] = with_timing ? Json(r.elapsed.count()) : Json(nullptr);
  out["residual"] = to_json(r.residual);
  return out;
}

Poly poly_from_json(const Json& j) {
  const Json* coeffs = &j;
  if (j.is_object()) {
    if (j.contains("var") && j.at("var") != "x") throw std::invalid_argument("polynomial variable must be x");
    if (!j.contains("coeffs")) throw std::invalid_argument("polynomial object needs \"coeffs\"");
    coeffs = &j.at("coeffs");
  }
  if (!coeffs->is_array()) throw std::invalid_argument("polynomial coefficients must be an array");
  std::vector<Scalar> values;
  for (const auto& c : *coeffs) {
    if (c.is_string()) {
      values.push_back(Scalar::parse(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      values.emplace_back(c.get<long>());
    } else {
      throw std::invalid_argument("coefficients must be strings \"p/q\" or integers, got " + c.dump());
    }
  }
  return Poly(std::move(values));
}

std::vector<Poly> polys_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of polynomials");
  std::vector<Poly> out;
  for (const auto& p : j) out.push_back(poly_from_json(p));
  return out;
}

}  // namespace orthinv::io
