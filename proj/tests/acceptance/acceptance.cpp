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

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cli.hpp"
#include "orthinv/families.hpp"
#include "orthinv/genhermite.hpp"
#include "orthinv/inversion.hpp"
#include "orthinv/series.hpp"
#include "orthinv/trisolve.hpp"
#include "support.hpp"

namespace {

using namespace orthinv;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome family_oracles() {
  Outcome out;
  std::mt19937_64 rng(1);
  const int order = 16;
  for (Family f : kAllFamilies) {
    for (int sample = 0; sample < 10; ++sample) {
      const ParamSet p = test::random_family_params(f, rng, order);
      const TruncSeries s = expand_generating_function(f, p, order);
      for (int n = 0; n <= order; ++n) {
        if (polynomial(f, n, p) != s[n]) {
          out.fail(std::string(to_string(f)) + " n=" + std::to_string(n) + " " + p.to_string());
        }
      }
    }
  }
  return out;
}

Outcome inversion_catalog() {
  Outcome out;
  SamplingOptions options;
  options.count = 20;
  for (IdentityId id : kAllIdentities) {
    if (id == IdentityId::jacobi_two_var) continue;
    const int size = is_matrix_identity(id) ? 10 : 16;
    const auto report = verify_identity(id, size, draw_samples(id, size, options));
    if (!report.pass) {
      out.fail(std::string(to_string(id)) + ": " + (report.counterexample ? report.counterexample->diagnostic : ""));
    }
  }
  return out;
}

Outcome two_variable_jacobi() {
  Outcome out;
  SamplingOptions options;
  options.count = 20;
  const auto samples = draw_samples(IdentityId::jacobi_two_var, 8, options);
  const auto report = verify_identity(IdentityId::jacobi_two_var, 8, samples);
  if (!report.pass) out.fail(report.counterexample ? report.counterexample->diagnostic : "fail");
  for (const auto& p : samples) {
    for (int n = 0; n <= 8; ++n) {
      if (!jacobi_two_var_residual(n, p).is_zero()) out.fail("nonzero residual at n=" + std::to_string(n));
    }
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j <= i; ++j) {
        ParamSet moved = p;
        moved.alpha = *p.alpha + Rational(j);
        moved.beta = *p.beta + Rational(j);
        for (int k = j; k <= i; ++k) {
          if (jacobi_two_var_left_factor(i - j, k - j, moved).eval(Poly::x()) != jacobi_inv_left_factor(i, j, k, p)) {
            out.fail("y=x specialization differs at " + std::to_string(i) + "," + std::to_string(j));
          }
        }
      }
    }
  }
  return out;
}

Outcome solver_agreement() {
  Outcome out;
  std::mt19937_64 rng(4);
  const int n_max = 8;
  for (Family f : {Family::laguerre, Family::hermite, Family::jacobi}) {
    int accepted = 0;
    while (accepted < 10) {
      const ParamSet p = test::random_family_params(f, rng, n_max);
      if (f == Family::jacobi) {
        const Rational s = *p.alpha + *p.beta;
        if (s.is_integer() && s <= Rational(-2) && s >= Rational(-2 * n_max - 2)) continue;
      }
      ++accepted;
      std::vector<Poly> rhs;
      for (int j = 1; j <= n_max; ++j) rhs.push_back(test::random_poly(rng, j));
      const DiffSystem sys{f, p, rhs};
      const auto generic = solve_generic(sys);
      const auto closed = solve_closed_form(sys);
      if (generic.coeffs != closed.coeffs) out.fail(std::string(to_string(f)) + " " + p.to_string());
      if (apply_operator(f, p, closed.coeffs) != rhs) out.fail(std::string(to_string(f)) + " back-substitution");
    }
  }
  return out;
}

Outcome kernel_and_eigenvalues() {
  Outcome out;
  for (int n = 0; n <= 20; ++n) {
    const Rational expected = pochhammer(Rational(3, 2), n) / factorial(n);
    if (genhermite::kernel(2 * n, Scalar(0)).eval(Scalar(0)) != Scalar(expected)) {
      out.fail("K_" + std::to_string(2 * n) + "(0,0)");
    }
    if (n >= 1 && genhermite::alpha_even(n) != Rational(4) * pochhammer(Rational(5, 2), n - 1) / factorial(n - 1)) {
      out.fail("alpha_" + std::to_string(2 * n));
    }
  }
  if (genhermite::alpha_even(1) != Rational(4)) out.fail("alpha_2 != 4");
  if (genhermite::alpha_even(2) != Rational(10)) out.fail("alpha_4 != 10");
  return out;
}

Outcome differential_equation() {
  Outcome out;
  std::mt19937_64 rng(6);
  for (int config_index = 0; config_index < 4; ++config_index) {
    genhermite::GenHermiteConfig config = genhermite::GenHermiteConfig::with_defaults(10);
    if (config_index > 0) {
      for (auto& a : config.odd_alphas) a = test::random_rational(rng);
    }
    const auto model = genhermite::build_model(config);
    for (int n = 0; n <= 10; ++n) {
      if (!genhermite::verify_de(n, model).pass()) {
        out.fail("config " + std::to_string(config_index) + " n=" + std::to_string(n));
      }
    }
  }
  return out;
}

Outcome hermite_orthogonality() {
  Outcome out;
  for (int m = 0; m <= 10; ++m) {
    for (int n = 0; n <= 10; ++n) {
      const Rational expected = m == n ? Rational(1) / (power(Rational(2), n) * factorial(n)) : Rational(0);
      if (hermite_moment_functional(hermite(m) * hermite(n)) != expected) {
        out.fail("<H_" + std::to_string(m) + " H_" + std::to_string(n) + ">");
      }
    }
  }
  return out;
}

struct ProcessResult {
  int code = -1;
  std::string out;
};

ProcessResult run_process(const std::string& command) {
  ProcessResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return result;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

ProcessResult run_in_process(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str()};
}

Outcome cli_determinism(const std::string& executable) {
  Outcome out;
  ProcessResult first;
  ProcessResult second;
  if (executable.empty()) {
    first = run_in_process({"suite", "--seed", "7"});
    second = run_in_process({"suite", "--seed", "7"});
  } else {
    const std::string command = "'" + executable + "' suite --seed 7";
    first = run_process(command);
    second = run_process(command);
  }
  if (first.code != 0) out.fail("first run exited " + std::to_string(first.code));
  if (second.code != 0) out.fail("second run exited " + std::to_string(second.code));
  if (first.out.empty()) out.fail("empty output");
  if (first.out != second.out) out.fail("outputs differ");
  if (first.out.find("\"status\": \"pass\"") == std::string::npos) out.fail("suite status is not pass");
  return out;
}

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 means no runtime limit
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char** argv) {
  const std::string executable = argc > 1 ? argv[1] : "";
  const std::vector<Criterion> criteria{
      {1, "family oracle equivalence, n<=16, 10 samples per family", 30, family_oracles},
      {2, "inversion catalog, matrices at size 10 x 20 samples, convolutions n<=16", 60, inversion_catalog},
      {3, "two-variable Jacobi identity n<=8 x 20 samples and y=x specialization", 0, two_variable_jacobi},
      {4, "closed-form vs generic solver, N=8, 10 samples per family", 0, solver_agreement},
      {5, "kernel values K_2n(0,0) and even eigenvalues, n<=20", 0, kernel_and_eigenvalues},
      {6, "generalized Hermite differential equation, n<=10, default + 3 random configs", 30,
       differential_equation},
      {7, "Hermite orthogonality via exact moments, m,n<=10", 0, hermite_orthogonality},
      {8, "suite --seed 7 twice: byte-identical JSON, exit 0", 0,
       [&executable] { return cli_determinism(executable); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      outcome.fail("runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(c.limit_seconds) + " s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (outcome.pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " (" << seconds
         << " s)";
    if (!outcome.pass) line << " -- " << outcome.detail;
    std::cout << line.str() << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
