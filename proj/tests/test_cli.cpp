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

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace orthinv::cli {
namespace {

using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;

  [[nodiscard]] Json json() const { return Json::parse(out); }
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, EvalHermite) {
  const auto r = invoke({"eval", "--family", "hermite", "--n", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["poly"]["var"], "x");
  EXPECT_EQ(j["poly"]["coeffs"], Json({"-1/4", "0", "1/2"}));
  EXPECT_EQ(j["family"], "hermite");
}

TEST(Cli, EvalWithParametersAndFormats) {
  const auto jac = invoke({"eval", "--family", "jacobi", "--n", "1", "--alpha", "0", "--beta", "0"});
  ASSERT_EQ(jac.code, kOk) << jac.err;
  EXPECT_EQ(jac.json()["poly"]["coeffs"], Json({"0", "1"}));
  EXPECT_EQ(jac.json()["params"], Json({{"alpha", "0"}, {"beta", "0"}}));

  const auto text = invoke({"--format", "text", "eval", "--family", "chebyshev_u", "--n", "2"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_EQ(text.out, "chebyshev_u n=2: 4*x^2 - 1\n");

  const auto latex = invoke({"eval", "--family", "hermite", "--n", "2", "--format", "latex"});
  ASSERT_EQ(latex.code, kOk);
  EXPECT_EQ(latex.out, "H_{2}(x) = \\frac{1}{2}x^{2}-\\frac{1}{4}\n");

  const auto mp = invoke({"eval", "--family", "meixner_pollaczek", "--n", "1", "--lambda", "1/2", "--phase", "3/5,4/5"});
  ASSERT_EQ(mp.code, kOk) << mp.err;
  EXPECT_EQ(mp.json()["params"]["phase"], "3/5+4/5*i");
}

TEST(Cli, UnknownNamesListTheEnumeration) {
  const auto fam = invoke({"eval", "--family", "hermit", "--n", "2"});
  EXPECT_EQ(fam.code, kUsage);
  for (const char* name : {"jacobi", "gegenbauer", "chebyshev_t", "chebyshev_u", "legendre", "laguerre", "hermite",
                           "charlier", "meixner", "meixner_pollaczek"}) {
    EXPECT_NE(fam.err.find(name), std::string::npos) << name;
  }
  const auto id = invoke({"verify", "--identity", "jacobi_inverse"});
  EXPECT_EQ(id.code, kUsage);
  EXPECT_NE(id.err.find("chebTU_relation"), std::string::npos) << id.err;
  EXPECT_NE(id.err.find("charlier_inv"), std::string::npos) << id.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "hermite"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "jacobi", "--n", "2", "--alpha", "1/3"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "laguerre", "--n", "2", "--alpha", "one"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "laguerre", "--n", "2", "--alpha", "1/0"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "hermite", "--n", "-1"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "meixner", "--n", "2", "--beta-m", "1", "--c", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"eval", "--family", "hermite", "--n", "2", "--format", "xml"}).code, kUsage);
  EXPECT_EQ(invoke({"verify", "--identity", "jacobi_inv", "--size", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"invert", "--size", "3"}).code, kUsage);
  EXPECT_EQ(invoke({"invert", "--identity", "hermite_conv"}).code, kUsage);
  EXPECT_EQ(invoke({"solve", "--family", "hermite", "--rhs", "[not json"}).code, kUsage);
  EXPECT_EQ(invoke({"solve", "--family", "legendre", "--rhs", "[]"}).code, kUsage);
  EXPECT_EQ(invoke({"gen-hermite", "coeffs", "--max-n", "4", "--odd-alphas", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"gen-hermite", "explain"}).code, kUsage);
}

TEST(Cli, HelpSucceeds) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("gen-hermite"), std::string::npos);
}

TEST(Cli, VerifyJacobiInverse) {
  const auto r = invoke({"verify", "--identity", "jacobi_inv", "--size", "8", "--samples", "20", "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["identity"], "jacobi_inv");
  EXPECT_EQ(j["size"], 8);
  EXPECT_EQ(j["samples"].size(), 20U);
  EXPECT_TRUE(j["counterexample"].is_null());
  EXPECT_TRUE(j["elapsed_ms"].is_null());
  for (const char* key : {"identity", "size", "samples", "status", "counterexample", "elapsed_ms"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, VerifyTimingAndText) {
  const auto timed = invoke({"verify", "--identity", "chebT_inverse", "--size", "4", "--timing"});
  ASSERT_EQ(timed.code, kOk);
  EXPECT_TRUE(timed.json()["elapsed_ms"].is_number_integer());
  const auto text = invoke({"--format", "text", "verify", "--identity", "hermite_conv", "--size", "5"});
  ASSERT_EQ(text.code, kOk);
  EXPECT_EQ(text.out, "hermite_conv size=5 samples=1: PASS\n");
  const auto latex = invoke({"--format", "latex", "verify", "--identity", "hermite_conv", "--size", "5"});
  EXPECT_NE(latex.out.find("\\texttt{hermite\\_conv}"), std::string::npos) << latex.out;
}

TEST(Cli, VerifyIsDeterministic) {
  const std::vector<std::string> args{"verify", "--identity", "meixner_inv", "--size", "5", "--samples", "6",
                                      "--seed", "3"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Cli, InvertFamilyAndIdentity) {
  const auto fam = invoke({"invert", "--family", "charlier", "--a", "2/9", "--size", "3"});
  ASSERT_EQ(fam.code, kOk) << fam.err;
  const Json j = fam.json();
  EXPECT_EQ(j["inverse"][1][0]["coeffs"], Json({"2/9", "-1"}));
  EXPECT_EQ(j["matrix"][1][0]["coeffs"], Json({"-2/9", "1"}));
  EXPECT_FALSE(j.contains("status"));

  const auto id = invoke({"invert", "--identity", "charlier_inv", "--a", "2/9", "--size", "3"});
  ASSERT_EQ(id.code, kOk) << id.err;
  EXPECT_EQ(id.json()["status"], "pass");
  EXPECT_EQ(id.json()["closed_form"], id.json()["inverse"]);

  const auto sampled = invoke({"invert", "--identity", "jacobi_inv", "--size", "3", "--seed", "4"});
  ASSERT_EQ(sampled.code, kOk) << sampled.err;
  EXPECT_TRUE(sampled.json()["params"].contains("alpha"));

  const auto pole = invoke({"invert", "--identity", "jacobi_inv", "--alpha", "-1", "--beta", "-2", "--size", "3"});
  EXPECT_EQ(pole.code, kUsage);
  EXPECT_NE(pole.err.find("pole"), std::string::npos) << pole.err;

  const auto latex = invoke({"--format", "latex", "invert", "--family", "chebyshev_u", "--size", "2"});
  EXPECT_NE(latex.out.find("\\begin{pmatrix}"), std::string::npos);
}

TEST(Cli, SolveHermite) {
  const auto r = invoke({"solve", "--family", "hermite", "--rhs", R"([{"var":"x","coeffs":["0","1"]}, []])"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["generic"][0]["coeffs"], Json({"0", "1"}));
  EXPECT_EQ(j["generic"][1]["coeffs"], Json({"0", "0", "-1"}));
  EXPECT_EQ(j["closed_form"], j["generic"]);
}

TEST(Cli, SolveLaguerreText) {
  const auto r = invoke({"--format", "text", "solve", "--family", "laguerre", "--alpha", "1/2", "--rhs", "[[1]]"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "a_1 = -1\nclosed form: PASS\n");
}

TEST(Cli, GenHermiteCoeffs) {
  const auto r = invoke({"gen-hermite", "coeffs", "--max-n", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["a"][0]["coeffs"], Json::array());
  EXPECT_EQ(j["a"][1]["coeffs"], Json({"0", "0", "-2"}));
  EXPECT_EQ(j["alphas"], Json({"0", "0", "4"}));
  EXPECT_TRUE(j["degree_bound_holds"].get<bool>());
}

TEST(Cli, GenHermiteCheckAndKernel) {
  const auto check = invoke({"gen-hermite", "check", "--max-n", "6", "--odd-alphas", "1/2,-3,7/5"});
  ASSERT_EQ(check.code, kOk) << check.err;
  const Json j = check.json();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["residuals"].size(), 7U);
  EXPECT_EQ(j["residuals"][3]["M1"]["coeffs"], Json::array());

  const auto kernel = invoke({"gen-hermite", "kernel", "--max-n", "2"});
  ASSERT_EQ(kernel.code, kOk);
  EXPECT_EQ(kernel.json()["kernels"][2]["coeffs"], Json({"3/2", "0", "-1"}));
}

TEST(Cli, SuiteIsByteDeterministic) {
  const auto first = invoke({"suite", "--seed", "7", "--samples", "3"});
  const auto second = invoke({"suite", "--seed", "7", "--samples", "3"});
  ASSERT_EQ(first.code, kOk) << first.err;
  EXPECT_EQ(first.out, second.out);
  const Json j = first.json();
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["reports"].size(), 19U);
  for (const auto& report : j["reports"]) {
    const std::string id = report["identity"];
    const int expected = id == "jacobi_two_var" ? 8
                         : (id == "hermite_conv" || id == "legendre_conv_u" || id == "chebT_geom_conv" ||
                            id == "chebU_recurrence" || id == "chebTU_relation")
                             ? 16
                             : 10;
    EXPECT_EQ(report["size"], expected) << id;
  }
}

}  // namespace
}  // namespace orthinv::cli
