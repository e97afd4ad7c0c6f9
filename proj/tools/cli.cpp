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

#include "cli.hpp"

#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "orthinv/families.hpp"
#include "orthinv/genhermite.hpp"
#include "orthinv/inversion.hpp"
#include "orthinv/trisolve.hpp"

namespace orthinv::cli {
namespace {

using io::Json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { json, text, latex };

struct GlobalFlags {
  std::string format = "json";
  bool timing = false;

  [[nodiscard]] Format fmt() const {
    if (format == "text") return Format::text;
    if (format == "latex") return Format::latex;
    return Format::json;
  }
};

struct ParamFlags {
  std::string alpha, beta, lambda, a, c, beta_m, phase;

  [[nodiscard]] bool any() const {
    return !(alpha.empty() && beta.empty() && lambda.empty() && a.empty() && c.empty() && beta_m.empty() &&
             phase.empty());
  }
};

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (Family f : kAllFamilies) out.emplace_back(to_string(f));
  return out;
}

std::vector<std::string> identity_names() {
  std::vector<std::string> out;
  for (IdentityId id : kAllIdentities) out.emplace_back(to_string(id));
  return out;
}

void add_param_flags(CLI::App* sub, ParamFlags& f) {
  sub->add_option("--alpha", f.alpha, "rational parameter alpha");
  sub->add_option("--beta", f.beta, "rational parameter beta (Jacobi)");
  sub->add_option("--lambda", f.lambda, "rational parameter lambda");
  sub->add_option("--a", f.a, "rational parameter a (Charlier)");
  sub->add_option("--c", f.c, "rational parameter c (Meixner)");
  sub->add_option("--beta-m", f.beta_m, "rational parameter beta (Meixner)");
  sub->add_option("--phase", f.phase, "unimodular phase \"a/b,c/d\" or \"a/b+c/d*i\"");
}

Rational flag_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

ParamSet collect_params(const ParamFlags& f) {
  ParamSet p;
  if (!f.alpha.empty()) p.alpha = flag_rational(f.alpha, "--alpha");
  if (!f.beta.empty()) p.beta = flag_rational(f.beta, "--beta");
  if (!f.lambda.empty()) p.lambda = flag_rational(f.lambda, "--lambda");
  if (!f.a.empty()) p.a = flag_rational(f.a, "--a");
  if (!f.c.empty()) p.c = flag_rational(f.c, "--c");
  if (!f.beta_m.empty()) p.beta_m = flag_rational(f.beta_m, "--beta-m");
  if (!f.phase.empty()) {
    try {
      p.phase = GaussianRational::parse(f.phase);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--phase: ") + e.what());
    }
  }
  return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string latex_symbol(Family f, int n, const ParamSet& p) {
  const std::string idx = "_{" + std::to_string(n) + "}";
  auto lx = [](const std::optional<Rational>& v) { return v ? to_latex(Scalar(*v)) : std::string("?"); };
  switch (f) {
    case Family::jacobi:
      return "P" + idx + "^{(" + lx(p.alpha) + "," + lx(p.beta) + ")}(x)";
    case Family::gegenbauer:
      return "C" + idx + "^{(" + lx(p.lambda) + ")}(x)";
    case Family::chebyshev_t:
      return "T" + idx + "(x)";
    case Family::chebyshev_u:
      return "U" + idx + "(x)";
    case Family::legendre:
      return "P" + idx + "(x)";
    case Family::laguerre:
      return "L" + idx + "^{(" + lx(p.alpha) + ")}(x)";
    case Family::hermite:
      return "H" + idx + "(x)";
    case Family::charlier:
      return "C" + idx + "^{(" + lx(p.a) + ")}(x)";
    case Family::meixner:
      return "M" + idx + "(x;" + lx(p.beta_m) + "," + lx(p.c) + ")";
    case Family::meixner_pollaczek:
      return "P" + idx + "^{(" + lx(p.lambda) + ")}(x;" + (p.phase ? to_latex(*p.phase) : "?") + ")";
  }
  return "p" + idx + "(x)";
}

std::string latex_matrix(const LowerTriPolyMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      if (j > 1) os << " & ";
      os << to_latex(m(i, j));
    }
    os << (i < m.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{pmatrix}";
  return os.str();
}

void text_matrix(std::ostream& out, const LowerTriPolyMatrix& m) {
  for (int i = 1; i <= m.size(); ++i) {
    out << "  row " << i << ":";
    for (int j = 1; j <= i; ++j) out << (j > 1 ? " | " : " ") << m(i, j).to_string();
    out << '\n';
  }
}

int default_size(IdentityId id) {
  if (id == IdentityId::jacobi_two_var) return 8;
  return is_matrix_identity(id) ? 10 : 16;
}

ParamSet with_default_phase(ParamSet p, bool needs_phase) {
  if (needs_phase && !p.phase) p.phase = default_phase();
  return p;
}

void text_report(std::ostream& out, const VerificationReport& r, bool timing) {
  out << to_string(r.identity) << " size=" << r.size << " samples=" << r.samples.size() << ": "
      << (r.pass ? "PASS" : "FAIL");
  if (timing) out << " (" << r.elapsed.count() << " ms)";
  out << '\n';
  if (r.counterexample) {
    const auto& c = *r.counterexample;
    out << "  counterexample at (" << c.i << "," << c.j << ") " << c.params.to_string() << ": " << c.diagnostic
        << "\n  residual: " << c.residual.to_string() << '\n';
  }
}

std::string latex_report_row(const VerificationReport& r) {
  std::string name(to_string(r.identity));
  std::string escaped;
  for (char ch : name) {
    if (ch == '_') escaped += '\\';
    escaped += ch;
  }
  return "\\texttt{" + escaped + "} & " + std::to_string(r.size) + " & " + std::to_string(r.samples.size()) +
         " & " + (r.pass ? "pass" : "fail") + " \\\\";
}

void latex_reports(std::ostream& out, const std::vector<VerificationReport>& reports) {
  out << "\\begin{tabular}{lrrl}\nidentity & size & samples & status \\\\\n\\hline\n";
  for (const auto& r : reports) out << latex_report_row(r) << '\n';
  out << "\\end{tabular}\n";
}

VerificationReport run_verification(IdentityId id, int size, int samples, std::uint64_t seed, bool pit) {
  if (size < 1) throw UsageError("--size must be positive");
  if (samples < 1) throw UsageError("--samples must be positive");
  SamplingOptions options;
  options.count = samples;
  options.seed = seed;
  options.pit = pit;
  const auto drawn = draw_samples(id, size, options);
  return verify_identity(id, size, drawn);
}

// ---- eval ----

struct EvalArgs {
  std::string family;
  int n = 0;
  ParamFlags params;
};

int cmd_eval(const EvalArgs& args, const GlobalFlags& g, std::ostream& out) {
  const Family f = *family_from_string(args.family);
  if (args.n < 0) throw UsageError("--n must be nonnegative");
  const ParamSet params = with_default_phase(collect_params(args.params), f == Family::meixner_pollaczek);
  validate_params(f, params);
  const Poly p = polynomial(f, args.n, params);
  switch (g.fmt()) {
    case Format::json:
      emit(out, Json{{"family", args.family},
                     {"n", args.n},
                     {"params", io::to_json(params)},
                     {"poly", io::to_json(p)}});
      break;
    case Format::text:
      out << args.family << " n=" << args.n;
      if (const auto s = params.to_string(); !s.empty()) out << ' ' << s;
      out << ": " << p.to_string() << '\n';
      break;
    case Format::latex:
      out << latex_symbol(f, args.n, params) << " = " << to_latex(p) << '\n';
      break;
  }
  return kOk;
}

// ---- verify ----

struct VerifyArgs {
  std::string identity;
  std::optional<int> size;
  int samples = 20;
  std::uint64_t seed = 0;
  bool pit = false;
};

int cmd_verify(const VerifyArgs& args, const GlobalFlags& g, std::ostream& out) {
  const IdentityId id = *identity_from_string(args.identity);
  const int size = args.size.value_or(default_size(id));
  const auto report = run_verification(id, size, args.samples, args.seed, args.pit);
  switch (g.fmt()) {
    case Format::json:
      emit(out, io::to_json(report, g.timing));
      break;
    case Format::text:
      text_report(out, report, g.timing);
      break;
    case Format::latex:
      latex_reports(out, {report});
      break;
  }
  return report.pass ? kOk : kVerificationFailed;
}

// ---- invert ----

struct InvertArgs {
  std::string family;
  std::string identity;
  int size = 6;
  std::uint64_t seed = 0;
  ParamFlags params;
};

int cmd_invert(const InvertArgs& args, const GlobalFlags& g, std::ostream& out) {
  if (args.family.empty() == args.identity.empty()) throw UsageError("invert needs exactly one of --family, --identity");
  if (args.size < 1) throw UsageError("--size must be positive");

  Json j = Json::object();
  LowerTriPolyMatrix matrix(args.size);
  LowerTriPolyMatrix inverse(args.size);
  std::optional<LowerTriPolyMatrix> closed;
  ParamSet params;
  std::string heading;

  if (!args.family.empty()) {
    const Family f = *family_from_string(args.family);
    params = with_default_phase(collect_params(args.params), f == Family::meixner_pollaczek);
    validate_params(f, params);
    matrix = build_matrix(f, params, args.size);
    inverse = invert_triangular(matrix);
    j["family"] = args.family;
    heading = args.family;
  } else {
    const IdentityId id = *identity_from_string(args.identity);
    if (!is_matrix_identity(id)) {
      throw UsageError(args.identity + " is a convolution identity with no matrix; use verify");
    }
    if (args.params.any()) {
      params = with_default_phase(collect_params(args.params), identity_params(id).phase);
      if (!admissible(id, args.size, params)) {
        throw UsageError("parameters " + params.to_string() + " hit a pole of " + args.identity + " at size " +
                         std::to_string(args.size));
      }
    } else {
      SamplingOptions options;
      options.count = 1;
      options.seed = args.seed;
      params = draw_samples(id, args.size, options).front();
    }
    const MatrixSpec spec = matrix_spec(id, params);
    matrix = build_matrix(spec.family, spec.params, args.size, spec.rule);
    inverse = invert_triangular(matrix);
    closed = closed_form_inverse(id, params, args.size);
    j["identity"] = args.identity;
    heading = args.identity;
  }
  const bool match = !closed || *closed == inverse;

  switch (g.fmt()) {
    case Format::json:
      j["size"] = args.size;
      j["params"] = io::to_json(params);
      j["matrix"] = io::to_json(matrix);
      j["inverse"] = io::to_json(inverse);
      if (closed) {
        j["closed_form"] = io::to_json(*closed);
        j["status"] = match ? "pass" : "fail";
      }
      emit(out, j);
      break;
    case Format::text:
      out << heading << " size=" << args.size;
      if (const auto s = params.to_string(); !s.empty()) out << ' ' << s;
      out << "\nmatrix:\n";
      text_matrix(out, matrix);
      out << "inverse:\n";
      text_matrix(out, inverse);
      if (closed) out << "closed form: " << (match ? "PASS" : "FAIL") << '\n';
      break;
    case Format::latex:
      out << "A = " << latex_matrix(matrix) << "\n\nA^{-1} = " << latex_matrix(inverse) << '\n';
      break;
  }
  return match ? kOk : kVerificationFailed;
}

// ---- solve ----

struct SolveArgs {
  std::string family;
  std::string rhs;
  std::string rhs_file;
  ParamFlags params;
};

int cmd_solve(const SolveArgs& args, const GlobalFlags& g, std::ostream& out) {
  const Family f = *family_from_string(args.family);
  if (args.rhs.empty() == args.rhs_file.empty()) throw UsageError("solve needs exactly one of --rhs, --rhs-file");
  std::string text = args.rhs;
  if (!args.rhs_file.empty()) {
    std::ifstream in(args.rhs_file);
    if (!in) throw UsageError("cannot read " + args.rhs_file);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  Json parsed;
  try {
    parsed = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("--rhs: ") + e.what());
  }
  DiffSystem system{f, collect_params(args.params), io::polys_from_json(parsed)};
  validate_params(f, system.params);

  const CoeffSolution generic = solve_generic(system);
  const CoeffSolution closed = solve_closed_form(system);
  const bool agree = generic.coeffs == closed.coeffs;
  const bool reproduces = apply_operator(f, system.params, generic.coeffs) == system.rhs;
  const bool ok = agree && reproduces;

  switch (g.fmt()) {
    case Format::json: {
      Json gen = Json::array();
      Json cf = Json::array();
      for (const auto& p : generic.coeffs) gen.push_back(io::to_json(p));
      for (const auto& p : closed.coeffs) cf.push_back(io::to_json(p));
      emit(out, Json{{"family", args.family},
                     {"params", io::to_json(system.params)},
                     {"generic", std::move(gen)},
                     {"closed_form", std::move(cf)},
                     {"status", ok ? "pass" : "fail"}});
      break;
    }
    case Format::text:
      for (std::size_t i = 0; i < generic.coeffs.size(); ++i) {
        out << "a_" << (i + 1) << " = " << generic.coeffs[i].to_string() << '\n';
      }
      out << "closed form: " << (ok ? "PASS" : "FAIL") << '\n';
      break;
    case Format::latex:
      for (std::size_t i = 0; i < generic.coeffs.size(); ++i) {
        out << "a_{" << (i + 1) << "}(x) = " << to_latex(generic.coeffs[i]) << '\n';
      }
      break;
  }
  return ok ? kOk : kVerificationFailed;
}

// ---- gen-hermite ----

struct GenHermiteArgs {
  std::string action;
  int max_n = 10;
  std::string odd_alphas;
  std::string y0 = "0";
};

genhermite::GenHermiteConfig make_config(const GenHermiteArgs& args) {
  if (args.max_n < 0) throw UsageError("--max-n must be nonnegative");
  if (args.odd_alphas.empty()) return genhermite::GenHermiteConfig::with_defaults(args.max_n);
  genhermite::GenHermiteConfig config;
  config.max_n = args.max_n;
  std::stringstream ss(args.odd_alphas);
  std::string item;
  while (std::getline(ss, item, ',')) config.odd_alphas.push_back(flag_rational(item, "--odd-alphas"));
  const auto needed = static_cast<std::size_t>((args.max_n + 1) / 2);
  if (config.odd_alphas.size() < needed) {
    throw UsageError("--odd-alphas needs " + std::to_string(needed) + " values for --max-n " +
                     std::to_string(args.max_n) + ", got " + std::to_string(config.odd_alphas.size()));
  }
  return config;
}

Json rationals_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

int gen_coeffs(const genhermite::GenHermiteConfig& config, const GlobalFlags& g, std::ostream& out) {
  const auto model = genhermite::build_model(config);
  const auto& a = model.coefficients.a;
  switch (g.fmt()) {
    case Format::json: {
      Json polys = Json::array();
      Json rhs = Json::array();
      for (const auto& p : a) polys.push_back(io::to_json(p));
      for (const auto& p : model.f_polys) rhs.push_back(io::to_json(p));
      emit(out, Json{{"max_n", config.max_n},
                     {"odd_alphas", rationals_json(config.odd_alphas)},
                     {"alphas", rationals_json(model.alphas)},
                     {"F", std::move(rhs)},
                     {"a", std::move(polys)},
                     {"degree_bound_holds", model.coefficients.degree_bound_holds}});
      break;
    }
    case Format::text:
      for (std::size_t k = 0; k < a.size(); ++k) out << "a_" << (k + 1) << " = " << a[k].to_string() << '\n';
      out << "deg a_k <= k: " << (model.coefficients.degree_bound_holds ? "yes" : "no") << '\n';
      break;
    case Format::latex:
      for (std::size_t k = 0; k < a.size(); ++k) out << "a_{" << (k + 1) << "}(x) = " << to_latex(a[k]) << '\n';
      break;
  }
  return kOk;
}

int gen_check(const genhermite::GenHermiteConfig& config, const GlobalFlags& g, std::ostream& out) {
  const auto model = genhermite::build_model(config);
  std::vector<genhermite::DeResidual> residuals;
  bool pass = true;
  for (int n = 0; n <= config.max_n; ++n) {
    residuals.push_back(genhermite::verify_de(n, model));
    pass = pass && residuals.back().pass();
  }
  switch (g.fmt()) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& r : residuals) {
        rows.push_back(Json{{"n", r.n},
                            {"M0", io::to_json(r.m0())},
                            {"M1", io::to_json(r.m1())},
                            {"M2", io::to_json(r.m2())},
                            {"status", r.pass() ? "pass" : "fail"}});
      }
      emit(out, Json{{"max_n", config.max_n},
                     {"odd_alphas", rationals_json(config.odd_alphas)},
                     {"residuals", std::move(rows)},
                     {"status", pass ? "pass" : "fail"}});
      break;
    }
    case Format::text:
      for (const auto& r : residuals) {
        out << "n=" << r.n << ": " << (r.pass() ? "PASS" : "FAIL");
        if (!r.pass()) {
          out << "  M^0: " << r.m0().to_string() << "  M^1: " << r.m1().to_string()
              << "  M^2: " << r.m2().to_string();
        }
        out << '\n';
      }
      break;
    case Format::latex:
      for (const auto& r : residuals) {
        out << "n=" << r.n << ": " << to_latex(r.m0()) << " + \\left(" << to_latex(r.m1()) << "\\right)M + \\left("
            << to_latex(r.m2()) << "\\right)M^2 = 0\n";
      }
      break;
  }
  return pass ? kOk : kVerificationFailed;
}

int gen_kernel(const GenHermiteArgs& args, const GlobalFlags& g, std::ostream& out) {
  if (args.max_n < 0) throw UsageError("--max-n must be nonnegative");
  Scalar y0;
  try {
    y0 = Scalar::parse(args.y0);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--y0: ") + e.what());
  }
  std::vector<Poly> kernels;
  for (int n = 0; n <= args.max_n; ++n) kernels.push_back(genhermite::kernel(n, y0));
  switch (g.fmt()) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& k : kernels) rows.push_back(io::to_json(k));
      emit(out, Json{{"max_n", args.max_n}, {"y0", y0.to_string()}, {"kernels", std::move(rows)}});
      break;
    }
    case Format::text:
      for (std::size_t n = 0; n < kernels.size(); ++n) {
        out << "K_" << n << "(x," << y0.to_string() << ") = " << kernels[n].to_string() << '\n';
      }
      break;
    case Format::latex:
      for (std::size_t n = 0; n < kernels.size(); ++n) {
        out << "K_{" << n << "}(x," << to_latex(y0) << ") = " << to_latex(kernels[n]) << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_gen_hermite(const GenHermiteArgs& args, const GlobalFlags& g, std::ostream& out) {
  if (args.action == "kernel") return gen_kernel(args, g, out);
  const auto config = make_config(args);
  if (args.action == "coeffs") return gen_coeffs(config, g, out);
  return gen_check(config, g, out);
}

// ---- suite ----

struct SuiteArgs {
  std::uint64_t seed = 0;
  int samples = 20;
  bool pit = false;
};

int cmd_suite(const SuiteArgs& args, const GlobalFlags& g, std::ostream& out) {
  std::vector<VerificationReport> reports;
  bool pass = true;
  for (IdentityId id : kAllIdentities) {
    reports.push_back(run_verification(id, default_size(id), args.samples, args.seed, args.pit));
    pass = pass && reports.back().pass;
  }
  switch (g.fmt()) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& r : reports) rows.push_back(io::to_json(r, g.timing));
      emit(out, Json{{"seed", args.seed},
                     {"samples", args.samples},
                     {"pit", args.pit},
                     {"reports", std::move(rows)},
                     {"status", pass ? "pass" : "fail"}});
      break;
    }
    case Format::text:
      for (const auto& r : reports) text_report(out, r, g.timing);
      out << (pass ? "all identities PASS" : "some identities FAIL") << '\n';
      break;
    case Format::latex:
      latex_reports(out, reports);
      break;
  }
  return pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of orthogonal-polynomial inversion formulas", "orthinv"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember(std::vector<std::string>{"json", "text", "latex"}))
      ->capture_default_str();
  app.add_flag("--timing", g.timing, "report wall-clock milliseconds (makes JSON output nondeterministic)");

  const auto families = family_names();
  const auto identities = identity_names();

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "print the coefficients of p_n(x)");
  eval->add_option("--family", eval_args.family, "polynomial family")->required()->check(CLI::IsMember(families));
  eval->add_option("--n", eval_args.n, "degree")->required();
  add_param_flags(eval, eval_args.params);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "verify one identity on sampled parameters");
  verify->add_option("--identity", verify_args.identity, "identity tag")
      ->required()
      ->check(CLI::IsMember(identities));
  verify->add_option("--size", verify_args.size, "matrix size or maximal convolution index");
  verify->add_option("--samples", verify_args.samples, "number of parameter samples")->capture_default_str();
  verify->add_option("--seed", verify_args.seed, "sampling seed")->capture_default_str();
  verify->add_flag("--pit", verify_args.pit, "use a deterministic grid that certifies the identity");

  InvertArgs invert_args;
  auto* invert = app.add_subcommand("invert", "invert a connection matrix");
  invert->add_option("--family", invert_args.family, "polynomial family")->check(CLI::IsMember(families));
  invert->add_option("--identity", invert_args.identity, "matrix identity tag")->check(CLI::IsMember(identities));
  invert->add_option("--size", invert_args.size, "matrix size")->capture_default_str();
  invert->add_option("--seed", invert_args.seed, "seed used when no parameters are given")->capture_default_str();
  add_param_flags(invert, invert_args.params);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "solve a triangular differential system for a_1..a_N");
  solve->add_option("--family", solve_args.family, "laguerre, hermite or jacobi")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"laguerre", "hermite", "jacobi"}));
  solve->add_option("--rhs", solve_args.rhs, "JSON array of right-hand sides F_1..F_N");
  solve->add_option("--rhs-file", solve_args.rhs_file, "file holding the JSON array of right-hand sides");
  add_param_flags(solve, solve_args.params);

  GenHermiteArgs gh_args;
  auto* gh = app.add_subcommand("gen-hermite", "generalized Hermite differential equation");
  gh->add_option("action", gh_args.action, "coeffs, check or kernel")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"coeffs", "check", "kernel"}));
  gh->add_option("--max-n", gh_args.max_n, "largest index")->capture_default_str();
  gh->add_option("--odd-alphas", gh_args.odd_alphas, "comma-separated alpha_1, alpha_3, ...");
  gh->add_option("--y0", gh_args.y0, "kernel base point")->capture_default_str();

  SuiteArgs suite_args;
  auto* suite = app.add_subcommand("suite", "verify every identity at its default size");
  suite->add_option("--seed", suite_args.seed, "sampling seed")->capture_default_str();
  suite->add_option("--samples", suite_args.samples, "samples per identity")->capture_default_str();
  suite->add_flag("--pit", suite_args.pit, "use certifying grids");

  std::vector<const char*> argv;
  argv.push_back("orthinv");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(eval_args, g, out);
    if (*verify) return cmd_verify(verify_args, g, out);
    if (*invert) return cmd_invert(invert_args, g, out);
    if (*solve) return cmd_solve(solve_args, g, out);
    if (*gh) return cmd_gen_hermite(gh_args, g, out);
    if (*suite) return cmd_suite(suite_args, g, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal check failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace orthinv::cli
