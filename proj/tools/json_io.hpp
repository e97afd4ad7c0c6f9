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

#ifndef ORTHINV_TOOLS_JSON_IO_HPP
#define ORTHINV_TOOLS_JSON_IO_HPP

#include <vector>

#include "json.hpp"
#include "orthinv/family_id.hpp"
#include "orthinv/genhermite.hpp"
#include "orthinv/inversion.hpp"
#include "orthinv/poly.hpp"

namespace orthinv::io {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& c);
/// {"var":"x","coeffs":["<scalar>", ...]}, ascending degree.
Json to_json(const Poly& p);
/// {"var":"y"|"M","coeffs":[<poly>, ...]}.
Json to_json(const BiPoly& b);
Json to_json(const ParamSet& p);
Json to_json(const LowerTriPolyMatrix& m);
/// {"identity", "size", "samples", "status", "counterexample", "elapsed_ms",
/// "residual"}; elapsed_ms is null unless `with_timing`.
Json to_json(const VerificationReport& r, bool with_timing);

/// Accepts a poly object, or a bare array of coefficients (strings or
/// integers) in ascending degree.
Poly poly_from_json(const Json& j);
std::vector<Poly> polys_from_json(const Json& j);

}  // namespace orthinv::io

#endif  // ORTHINV_TOOLS_JSON_IO_HPP
