/*
 * Copyright 2026 The modwit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "modwit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "modwit/bvloc.hpp"
#include "modwit/eisenstein.hpp"
#include "modwit/io.hpp"
#include "modwit/pfaff.hpp"
#include "modwit/quasimodular.hpp"
#include "modwit/witten.hpp"

namespace modwit::cli {

namespace {

using Json = nlohmann::ordered_json;

class Reporter {
 public:
  Reporter(bool structured, std::ostream& out) : structured_(structured), out_(out) {}

  void add(const std::string& key, Json value) { fields_.emplace_back(key, std::move(value)); }

  void flush(const std::string& record) {
    if (structured_) {
      Json j;
      j["record"] = record;
      for (auto& [k, v] : fields_) j[k] = v;
      out_ << j.dump() << "\n";
    } else {
      for (auto& [k, v] : fields_) out_ << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    fields_.clear();
  }

  // Text mode puts the whole configuration on one comment line.
  void flush_config() {
    if (structured_) return flush("config");
    out_ << "# modwit";
    for (auto& [k, v] : fields_) {
      if (k == "subcommand") {
        out_ << " " << v.get<std::string>();
      } else if (k == "inputs") {
        for (const auto& in : v) out_ << " " << in.get<std::string>();
      } else if (k == "tau") {
        out_ << " tau=" << v[0].get<std::string>() << "+" << v[1].get<std::string>() << "i";
      } else {
        out_ << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
    out_ << "\n";
    fields_.clear();
  }

 private:
  bool structured_;
  std::ostream& out_;
  std::vector<std::pair<std::string, Json>> fields_;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const RunConfig& c, const std::string& what) {
  if (c.inputs.empty()) throw InputError(c.subcommand + " needs " + what);
  const std::string& in = c.inputs.front();
  if (std::filesystem::exists(in)) {
    std::ifstream f(in);
    if (!f) throw InputError("cannot read '" + in + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }
  // inline records are accepted in place of a file
  auto b = in.find_first_not_of(" \t");
  if (b != std::string::npos && in[b] == '{') return in;
  throw InputError("cannot read '" + in + "'");
}

Complex tau_value(const RunConfig& c) {
  return {parse_rational(c.tau_re).get_d(), parse_rational(c.tau_im).get_d()};
}

GaussianPi tau_exact(const RunConfig& c) {
  return GaussianPi(GaussianRational{parse_rational(c.tau_re), parse_rational(c.tau_im)});
}

LatticeOrdering ordering_for(const RunConfig& c, int k) {
  if (c.ordering.empty()) return default_ordering(k, c.shell_bound);
  return LatticeOrdering::parse(c.ordering, c.shell_bound);
}

Json complex_json(Complex z) {
  auto [re, im] = complex_to_strings(z);
  return Json::array({re, im});
}


void validate(const RunConfig& c) {
  static const std::vector<std::string> subs = {"eisenstein", "witten-class", "genus", "decompose",
                                                "pfaffian-product", "anomaly", "localize"};
  if (std::find(subs.begin(), subs.end(), c.subcommand) == subs.end()) {
    throw InputError("unknown subcommand '" + c.subcommand + "'");
  }
  if (c.q_order < 1) throw InputError("--q-order must be positive");
  if (c.shell_bound < 1) throw InputError("--shell-bound must be positive");
  if (c.format != "text" && c.format != "structured") throw InputError("--format must be text or structured");
  if (!(c.tolerance > 0)) throw InputError("--tolerance must be positive");
  if (c.k < 1) throw InputError("--k must be positive");
  if (c.roots < 0 || c.roots > 8) throw InputError("--roots must be in 0..8");
  if (c.dim < 0 || c.dim % 2 != 0 || c.dim > 24) throw InputError("--dim must be even and at most 24");
  if (!c.scalar_mode.empty() && c.scalar_mode != "exact" && c.scalar_mode != "complex") {
    throw InputError("--scalar-mode must be exact or complex");
  }
  Complex tau;
  try {
    tau = tau_value(c);
  } catch (const std::exception& e) {
    throw InputError(std::string("--tau: ") + e.what());
  }
  if (!(tau.imag() > 0)) throw InputError("--tau must lie in the upper half plane");
  if (!c.ordering.empty()) LatticeOrdering::parse(c.ordering, c.shell_bound);
}

void header(const RunConfig& c, Reporter& r) {
  std::ostringstream tol;
  tol << c.tolerance;
  r.add("subcommand", c.subcommand);
  r.add("inputs", c.inputs);
  r.add("q_order", c.q_order);
  r.add("shell_bound", c.shell_bound);
  r.add("tau", Json::array({c.tau_re, c.tau_im}));
  r.add("ordering", c.ordering.empty() ? "default" : c.ordering);
  r.add("scalar_mode", c.scalar_mode.empty() ? "default" : c.scalar_mode);
  r.add("tolerance", tol.str());
  r.add("k", c.k);
  r.add("roots", c.roots);
  r.add("dim", c.dim);
  r.flush_config();
}

int run_eisenstein(const RunConfig& c, Reporter& r) {
  QSeries f = eisenstein_q(c.k, c.q_order);
  r.add("series", f.render());
  r.add("record", qseries_to_yaml(f));
  r.flush("series");
  Complex tau = tau_value(c);
  LatticeOrdering ord = ordering_for(c, c.k);
  Complex lattice = eisenstein_lattice(c.k, tau, ord);
  Complex from_series = evaluate_at_tau(f, tau) * two_zeta(c.k);
  r.add("ordering", ord.describe());
  r.add("lattice_value", complex_json(lattice));
  r.add("series_value", complex_json(from_series));
  r.add("difference", format_double(std::abs(lattice - from_series)));
  r.flush("lattice");
  for (const auto& [name, g] : {std::pair<std::string, GammaElement>{"T", GammaElement::T()},
                                std::pair<std::string, GammaElement>{"S", GammaElement::S()}}) {
    Complex res = transform_residual(c.k, g, tau, ord);
    r.add("gamma", name);
    r.add("residual", complex_json(res));
    r.add("abs_residual", format_double(std::abs(res)));
    r.flush("transform");
  }
  return kOk;
}

int run_witten_class(const RunConfig& c, Reporter& r) {
  ChernRootModel model(c.roots, c.dim);
  Element<QSeries> cls = witten_class(model, c.q_order);
  r.add("class", cls.render());
  r.flush("witten_class");
  Element<Rational> q0 = witten_class_q0(model);
  bool ok = q0 == a_hat_taylor(model, 2);
  r.add("q0", q0.render());
  r.add("check", std::string("q0 == prod (x/2)/sinh(x/2) over +-x: ") + (ok ? "OK" : "FAIL"));
  r.flush("a_hat");
  return ok ? kOk : kIdentityFailed;
}

int report_genus(const ManifoldDescriptor& d, const RunConfig& c, Reporter& r) {
  StringReport rep = string_modularity_check(d, c.q_order);
  r.add("descriptor", descriptor_to_yaml(d));
  r.add("series", rep.genus.render());
  r.add("weight", rep.weight);
  r.add("decomposition", rep.decomposition.render());
  r.add("e2_coefficient", rep.e2_part.render());
  r.add("verdict", rep.verdict());
  r.add("symbolic_check", rep.symbolic_agrees ? "OK" : "FAIL");
  r.flush("genus");
  return rep.symbolic_agrees ? kOk : kIdentityFailed;
}

int run_genus(const RunConfig& c, Reporter& r) {
  ManifoldDescriptor d;
  try {
    d = parse_descriptor(read_input(c, "a descriptor"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return report_genus(d, c, r);
}

int run_decompose(const RunConfig& c, Reporter& r) {
  QSeries f;
  try {
    f = qseries_from_yaml(read_input(c, "a series record"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  r.add("series", f.render());
  r.add("weight", f.weight());
  try {
    QuasiModularPolynomial p = quasi_modular_decompose(f);
    r.add("decomposition", p.render());
    r.add("e2_coefficient", p.e2_part().render());
    r.add("verdict", p.involves_e2() ? "quasi-modular" : "modular");
    r.flush("decompose");
    return kOk;
  } catch (const NoDecomposition& e) {
    r.add("decomposition", "none");
    r.add("verdict", std::string("no decomposition: ") + e.what());
    r.flush("decompose");
    return kIdentityFailed;
  }
}

Monomial b2x2(const ChernRootModel& model) {
  Monomial m;
  m.e[static_cast<std::size_t>(model.algebra()->require("b"))] = 2;
  m.e[static_cast<std::size_t>(model.algebra()->require(root_name(1)))] = 2;
  return m;
}

int run_pfaffian_product(const RunConfig& c, Reporter& r) {
  if (c.roots < 1) throw InputError("pfaffian-product needs --roots >= 1");
  ChernRootModel model(c.roots, c.dim);
  const bool exact = c.scalar_mode == "exact";
  std::vector<long> bounds;
  for (long b : {c.shell_bound / 8, c.shell_bound / 4, c.shell_bound / 2, c.shell_bound}) {
    if (b >= 1 && (bounds.empty() || bounds.back() != b)) bounds.push_back(b);
  }
  const std::string ord_name = c.ordering.empty() ? "shells" : c.ordering;
  const Monomial mono = b2x2(model);
  bool all_ok = true;
  Complex previous = 0.0;
  bool have_previous = false;
  for (long bound : bounds) {
    LatticeOrdering ord = LatticeOrdering::parse(ord_name, bound);
    if (ord.kind() == LatticeOrdering::Kind::kRowMajor) ord = LatticeOrdering::row_major(bound, bound, false);
    Complex coef;
    bool ok;
    std::string mismatch;
    if (exact) {
      GaussianPi tau = tau_exact(c);
      auto prod = regularized_product<GaussianPi>(model, ord, tau);
      auto expo = lattice_exponential<GaussianPi>(model, ord, tau);
      ok = prod == expo;
      coef = prod.coefficient(mono).to_complex();
      mismatch = ok ? "0" : "nonzero";
    } else {
      Complex tau = tau_value(c);
      auto prod = regularized_product<Complex>(model, ord, tau);
      auto expo = lattice_exponential<Complex>(model, ord, tau);
      double worst = 0.0;
      double scale = 1.0;
      const auto diff = prod - expo;
      for (const auto& [m, v] : diff.terms()) worst = std::max(worst, std::abs(v));
      for (const auto& [m, v] : expo.terms()) scale = std::max(scale, std::abs(v));
      ok = worst <= c.tolerance * scale;
      coef = prod.coefficient(mono);
      mismatch = format_double(worst);
    }
    all_ok = all_ok && ok;
    r.add("bound", bound);
    r.add("ordering", ord.describe());
    r.add("blocks", static_cast<long>(ord.z2plus_count()));
    r.add("b2_x1_2_coefficient", complex_json(coef));
    r.add("drift", have_previous ? format_double(std::abs(coef - previous)) : std::string("-"));
    r.add("product_vs_exponential", mismatch);
    r.flush("truncation");
    previous = coef;
    have_previous = true;
  }
  // E2 partial sums in the two orderings at the largest bound
  Complex tau = tau_value(c);
  Complex shells = eisenstein_lattice(1, tau, LatticeOrdering::symmetric_shells(c.shell_bound));
  Complex rows = eisenstein_lattice(1, tau, LatticeOrdering::row_major(c.shell_bound, c.shell_bound, true));
  r.add("e2_shells", complex_json(shells));
  r.add("e2_row_major", complex_json(rows));
  r.add("ordering_shift", complex_json(rows - shells));
  r.add("identity", all_ok ? "OK" : "FAIL");
  r.flush("ordering");
  return all_ok ? kOk : kIdentityFailed;
}

int run_anomaly(const RunConfig& c, Reporter& r) {
  ChernRootModel model(c.roots, c.dim);
  AnomalyCheck chk = verify_anomaly(model, c.q_order);
  r.add("delta", chk.delta);
  r.add("primitive", chk.primitive);
  r.add("symbolic", chk.symbolic_ok ? "OK" : "FAIL");
  r.add("series", chk.series_ok ? "OK" : "FAIL");
  r.add("vanishes_mod_p1", chk.vanishes_mod_p1 ? "OK" : "FAIL");
  r.add("verdict", std::string("delta(Wit) == d(A): ") + (chk.ok() ? "OK" : "FAIL"));
  r.flush("anomaly");
  return chk.ok() ? kOk : kIdentityFailed;
}

int run_localize(const RunConfig& c, Reporter& r) {
  EquivariantSurfaceProblem p;
  try {
    p = parse_problem(read_input(c, "a problem"));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  LocalizationReport rep;
  try {
    rep = bv_localize(p);
  } catch (const FixedPointDegenerate& e) {
    throw InputError(e.what());
  } catch (const std::domain_error& e) {
    r.add("verdict", std::string("FAIL: ") + e.what());
    r.flush("localize");
    return kIdentityFailed;
  }
  bool ok = rep.residual <= c.tolerance;
  r.add("alpha0", p.alpha0.render());
  r.add("g", p.g.render());
  r.add("s", to_string(p.s));
  r.add("grid", p.grid);
  r.add("t", p.t ? format_double(*p.t) : std::string("-"));
  r.add("lhs", format_double(rep.lhs));
  r.add("rhs", format_double(rep.rhs));
  r.add("residual", format_double(rep.residual));
  r.add("closedness", format_double(rep.closedness));
  r.add("verdict", ok ? "OK" : "FAIL");
  r.flush("localize");
  return ok ? kOk : kIdentityFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Reporter r(config.format == "structured", out);
    header(config, r);
    const std::string& s = config.subcommand;
    if (s == "eisenstein") return run_eisenstein(config, r);
    if (s == "witten-class") return run_witten_class(config, r);
    if (s == "genus") return run_genus(config, r);
    if (s == "decompose") return run_decompose(config, r);
    if (s == "pfaffian-product") return run_pfaffian_product(config, r);
    if (s == "anomaly") return run_anomaly(config, r);
    if (s == "localize") return run_localize(config, r);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const MissingNumber& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << "\n";
    return kIdentityFailed;
  }
  return kInputError;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Eisenstein series, Witten classes, regularized Pfaffians and localization checks", "modwit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::vector<std::string> tau;
  app.add_option("--q-order", c.q_order, "q-expansion order")->capture_default_str();
  app.add_option("--shell-bound", c.shell_bound, "lattice bound")->capture_default_str();
  app.add_option("--tau", tau, "tau as two decimals: real imaginary")->expected(2);
  app.add_option("--ordering", c.ordering, "shells | z2plus | row-major | row-major-raw");
  app.add_option("--scalar-mode", c.scalar_mode, "exact | complex");
  app.add_option("--format", c.format, "text | structured")->capture_default_str();
  app.add_option("--tolerance", c.tolerance, "numeric tolerance")->capture_default_str();

  auto* eis = app.add_subcommand("eisenstein", "q-table, lattice value and transformation residuals");
  eis->add_option("--k", c.k, "index of E_{2k}")->capture_default_str();
  auto* wc = app.add_subcommand("witten-class", "Witten class of a Chern-root model");
  auto* gen = app.add_subcommand("genus", "Witten genus and modularity verdict of a descriptor");
  gen->add_option("input", c.inputs, "descriptor file or inline record")->required();
  auto* dec = app.add_subcommand("decompose", "quasi-modular decomposition of a series record");
  dec->add_option("input", c.inputs, "series file or inline record")->required();
  auto* pf = app.add_subcommand("pfaffian-product", "truncation table of the regularized Pfaffian product");
  auto* an = app.add_subcommand("anomaly", "check delta(Wit) = d(A)");
  auto* loc = app.add_subcommand("localize", "fixed-point formula on the rotated sphere");
  loc->add_option("input", c.inputs, "problem file or inline record")->required();
  for (auto* sub : {wc, pf, an}) {
    sub->add_option("--roots", c.roots, "number of Chern roots")->capture_default_str();
    sub->add_option("--dim", c.dim, "form-degree truncation")->capture_default_str();
  }

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (!tau.empty()) {
    c.tau_re = tau[0];
    c.tau_im = tau[1];
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  return run(c, out, err);
}

}  // namespace modwit::cli
