/*
   Copyright 2026 The hwm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// hwm: command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "hwm/battery.hpp"
#include "hwm/errors.hpp"
#include "hwm/hwmatrix.hpp"
#include "hwm/instance.hpp"
#include "hwm/verify.hpp"
#include "hwm/zeta.hpp"

namespace {

using hwm::Json;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Common {
  std::string instance;
  std::size_t series_order = 0;
  unsigned trials = 20;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::uint64_t field_guard = hwm::kDefaultFieldGuard;
  std::size_t det_guard = hwm::kCofactorMaxDim;
  std::vector<int> subset;
  bool json = false;
  bool timing = false;

  hwm::VerifyOptions verify_options() const {
    hwm::VerifyOptions o;
    o.series_order = series_order;
    o.trials = trials;
    o.seed = seed;
    o.workers = workers;
    o.field_guard = field_guard;
    o.det_dim_guard = det_guard;
    return o;
  }
  hwm::IndexSubset index_subset(int n) const {
    if (subset.empty()) return hwm::IndexSubset::full(n);
    for (int i : subset)
      if (i < 0 || i > n) throw hwm::InputError("subset index " + std::to_string(i) + " outside 0.." + std::to_string(n));
    return hwm::IndexSubset::of(subset);
  }
};

// Plain text is a rendering of the JSON document: scalars inline, small
// arrays on one line, objects indented.
void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object() && !value.empty()) {
      os << pad << key << ":\n";
      render(os, value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << pad << key << ":\n";
      for (std::size_t i = 0; i < value.size(); ++i) {
        os << pad << "  [" << i << "]\n";
        render(os, value[i], indent + 4);
      }
    } else if (value.is_string()) {
      os << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      os << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const Json& doc, const Common& c) {
  if (c.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    render(std::cout, doc, 0);
  }
}

void add_warnings(Json& doc, const std::vector<std::string>& warnings) {
  if (!warnings.empty()) doc["warnings"] = warnings;
}

Json report_list(const std::vector<hwm::Report>& reports, const Common& c, bool& all_pass) {
  Json arr = Json::array();
  all_pass = true;
  for (const auto& r : reports) {
    Json j = hwm::to_json(r, c.timing);
    j.erase("instance");
    arr.push_back(j);
    all_pass = all_pass && r.pass;
  }
  return arr;
}

int run_matrix(const Common& c) {
  std::vector<std::string> warnings;
  const hwm::HypersurfaceSpec spec = hwm::load_spec(c.instance, &warnings);
  const hwm::IndexSubset subset = c.index_subset(spec.n);
  const hwm::SymbolicMatrix sym = hwm::symbolic_matrix(spec, subset, c.workers);
  Json doc{{"instance", hwm::instance_echo(spec)}, {"subset", subset.to_string()}, {"mu_subset", sym.mu}};
  Json index = Json::array();
  for (const auto& u : sym.index) index.push_back(u.coords);
  doc["index"] = index;
  Json rows = Json::array();
  for (std::size_t i = 0; i < sym.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < sym.dim(); ++j) row.push_back(sym.entries(i, j).to_string());
    rows.push_back(row);
  }
  doc["symbolic"] = rows;
  if (!spec.all_coefficients_zero()) {
    const auto lambda = spec.coefficients();
    auto dump = [](const hwm::EvaluatedMatrix& m) {
      Json out = Json::array();
      for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(hwm::format_element(m.entries(i, j)));
        out.push_back(row);
      }
      return out;
    };
    doc["evaluated"] = dump(hwm::evaluate(sym, lambda));
    const hwm::EvaluatedMatrix product = hwm::frobenius_product(sym, lambda, spec.a);
    doc["frobenius_product"] = dump(product);
    const hwm::FpPoly det = hwm::char_poly_rev(product);
    doc["det"] = det.to_string();
    doc["det_coeffs"] = det.coeffs;
  }
  add_warnings(doc, warnings);
  emit(doc, c);
  return 0;
}

int run_zeta(const Common& c) {
  std::vector<std::string> warnings;
  const hwm::HypersurfaceSpec spec = hwm::load_spec(c.instance, &warnings);
  hwm::require_nondegenerate(spec);
  const std::size_t order = c.series_order ? c.series_order : hwm::default_series_order(spec);
  const hwm::CountOptions options{c.workers, c.field_guard};
  const auto counts = hwm::point_counts(spec, order, options);
  const hwm::ExactSeries P = hwm::p_series(hwm::zeta_series(counts), spec);
  const hwm::SeriesModP reduced = hwm::scale_and_reduce(P, spec);
  Json doc{{"instance", hwm::instance_echo(spec)},
           {"series_order", order},
           {"point_counts", counts},
           {"p_series", P.to_strings()},
           {"scaled_mod_p", reduced.coeffs}};
  add_warnings(doc, warnings);
  emit(doc, c);
  return 0;
}

hwm::Report invertibility_for_spec(const hwm::HypersurfaceSpec& spec, const hwm::VerifyOptions& options) {
  try {
    return hwm::check_generic_invertibility(
        hwm::construct_arrangement(hwm::IndexSubset::full(spec.n), spec.support()), spec.p, options);
  } catch (const hwm::InputError& e) {
    hwm::Report r;
    r.check = "invertibility";
    r.pass = true;
    r.skipped = true;
    r.warnings.push_back(e.what());
    return r;
  }
}

int run_verify(const Common& c, const std::string& check) {
  std::vector<std::string> warnings;
  const hwm::HypersurfaceSpec spec = hwm::load_spec(c.instance, &warnings);
  hwm::require_nondegenerate(spec);
  const hwm::VerifyOptions options = c.verify_options();
  std::vector<hwm::Report> reports;
  if (check == "main") {
    reports.push_back(hwm::check_main_congruence(spec, options));
  } else if (check == "divisible") {
    reports.push_back(hwm::check_divisible_case(spec, options));
  } else if (check == "hw-oracle") {
    reports.push_back(hwm::check_hw_oracle(spec, options));
  } else if (check == "euler") {
    reports.push_back(hwm::check_euler_all(spec, options));
  } else if (check == "box") {
    reports.push_back(hwm::check_box_all(spec, options));
  } else if (check == "invertibility") {
    reports.push_back(hwm::check_generic_invertibility(
        hwm::construct_arrangement(hwm::IndexSubset::full(spec.n), spec.support()), spec.p, options));
  } else {
    reports.push_back(hwm::check_congruence(spec, options));
    if (spec.mu() == 0) {
      reports.push_back(hwm::check_hw_oracle(spec, options));
    } else {
      hwm::Report r;
      r.check = "hw-oracle";
      r.pass = r.skipped = true;
      r.warnings.push_back("mu > 0: the classical oracle does not apply");
      reports.push_back(r);
    }
    reports.push_back(hwm::check_euler_all(spec, options));
    reports.push_back(hwm::check_box_all(spec, options));
    reports.push_back(invertibility_for_spec(spec, options));
  }
  bool all_pass = true;
  Json doc{{"instance", hwm::instance_echo(spec)}};
  doc["reports"] = report_list(reports, c, all_pass);
  doc["pass"] = all_pass;
  add_warnings(doc, warnings);
  emit(doc, c);
  return all_pass ? 0 : kExitFail;
}

int run_hypergeom(const Common& c) {
  std::vector<std::string> warnings;
  const hwm::HypersurfaceSpec spec = hwm::load_spec(c.instance, &warnings);
  const hwm::VerifyOptions options = c.verify_options();
  Json basis = Json::array();
  for (const auto& l : hwm::relation_lattice_basis(spec.support())) basis.push_back(l);
  std::vector<hwm::Report> reports{hwm::check_euler_all(spec, options), hwm::check_box_all(spec, options)};
  bool all_pass = true;
  Json doc{{"instance", hwm::instance_echo(spec)}, {"relation_basis", basis}};
  doc["reports"] = report_list(reports, c, all_pass);
  doc["pass"] = all_pass;
  add_warnings(doc, warnings);
  emit(doc, c);
  return all_pass ? 0 : kExitFail;
}

int run_invertibility(const Common& c, int n, int d, std::uint32_t p) {
  hwm::Arrangement arrangement;
  std::uint32_t prime = p;
  if (!c.instance.empty()) {
    const hwm::HypersurfaceSpec spec = hwm::load_spec(c.instance);
    arrangement = hwm::construct_arrangement(c.index_subset(spec.n), spec.support());
    prime = spec.p;
  } else {
    if (n < 1 || d < 2 || !hwm::is_prime(p)) throw hwm::InputError("give an instance file or --n, --d and a prime --p");
    arrangement = hwm::construct_arrangement(c.index_subset(n), n, d);
  }
  const hwm::VerifyOptions options = c.verify_options();
  std::vector<hwm::Report> reports{hwm::check_generic_invertibility(arrangement, prime, options)};
  if (arrangement.u_min.size() <= options.det_dim_guard) {
    reports.push_back(hwm::constant_term_separation(arrangement, prime, options));
  }
  bool all_pass = true;
  Json doc{{"arrangement", reports.front().instance}};
  doc["reports"] = report_list(reports, c, all_pass);
  doc["pass"] = all_pass;
  emit(doc, c);
  return all_pass ? 0 : kExitFail;
}

int run_battery(const Common& c, std::size_t count, const std::string& dir) {
  const auto instances = dir.empty() ? hwm::random_instances(c.seed, count) : hwm::directory_instances(dir);
  hwm::BatteryOptions options;
  options.workers = c.workers;
  options.field_guard = std::max<std::uint64_t>(c.field_guard, options.field_guard);
  const hwm::BatteryResult result = hwm::run_battery(instances, options);
  if (c.json) {
    std::cout << result.report.dump(2) << "\n";
  } else {
    std::cout << "instance                              theorem    congr  hw     euler  box\n";
    for (const auto& rec : result.report["instances"]) {
      const Json& checks = rec["checks"];
      auto cell = [&](const char* name) -> std::string {
        if (!checks.contains(name)) return "-";
        return checks[name]["pass"].get<bool>() ? "pass" : "FAIL";
      };
      std::string theorem = checks.contains("congruence") ? checks["congruence"]["theorem"].get<std::string>() : "-";
      char line[256];
      std::snprintf(line, sizeof line, "%-37s %-10s %-6s %-6s %-6s %-6s", rec["key"].get<std::string>().c_str(),
                    theorem.c_str(), cell("congruence").c_str(), cell("hw_oracle").c_str(), cell("euler").c_str(),
                    cell("box").c_str());
      std::cout << line;
      if (rec.contains("internal_error")) std::cout << "  " << rec["internal_error"]["code"].get<std::string>();
      if (rec.contains("input_error")) std::cout << "  " << rec["input_error"].get<std::string>();
      std::cout << "\n";
    }
    std::cout << "\nsummary:\n";
    render(std::cout, result.report["summary"], 2);
  }
  if (result.internal_error) return kExitInternal;
  return result.all_pass ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hwm: Hasse-Witt type matrices, point counts and mod-p zeta checks for projective hypersurfaces"};
  app.require_subcommand(1);
  Common c;

  auto add_common = [&](CLI::App* sub, bool instance_required) {
    auto* opt = sub->add_option("instance", c.instance, "instance file (JSON, see docs/instance-format.md)");
    if (instance_required) opt->required();
    sub->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--field-guard", c.field_guard, "largest field size to build")->check(CLI::PositiveNumber);
    sub->add_flag("--json", c.json, "emit JSON");
  };

  auto* matrix = app.add_subcommand("matrix", "symbolic matrix, its value at lambda and det(I - tM)");
  add_common(matrix, true);
  matrix->add_option("--subset", c.subset, "index subset I (default: all of 0..n)")->delimiter(',');

  auto* zeta = app.add_subcommand("zeta", "point counts, P-series and its reduction mod p");
  add_common(zeta, true);
  zeta->add_option("--series-order", c.series_order, "series order K")->check(CLI::PositiveNumber);

  std::string check = "all";
  auto* verify = app.add_subcommand("verify", "run theorem checks on an instance");
  add_common(verify, true);
  verify->add_option("--check", check, "which check")
      ->check(CLI::IsMember({"main", "divisible", "hw-oracle", "euler", "box", "invertibility", "all"}));
  verify->add_option("--series-order", c.series_order, "series order K")->check(CLI::PositiveNumber);
  verify->add_option("--trials", c.trials, "Schwartz-Zippel trials")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", c.seed, "random seed");
  verify->add_option("--det-guard", c.det_guard, "largest symbolic determinant dimension");
  verify->add_flag("--timing", c.timing, "include timings in the reports");

  auto* hypergeom = app.add_subcommand("hypergeom", "Euler and box operator checks");
  add_common(hypergeom, true);
  hypergeom->add_flag("--timing", c.timing, "include timings in the reports");

  int inv_n = 0;
  int inv_d = 0;
  std::uint32_t inv_p = 0;
  auto* invert = app.add_subcommand("invertibility", "generic invertibility for the full-monomial arrangement");
  add_common(invert, false);
  invert->add_option("--n", inv_n, "projective dimension");
  invert->add_option("--d", inv_d, "degree");
  invert->add_option("--p", inv_p, "prime");
  invert->add_option("--subset", c.subset, "index subset I (default: all of 0..n)")->delimiter(',');
  invert->add_option("--trials", c.trials, "Schwartz-Zippel trials")->check(CLI::NonNegativeNumber);
  invert->add_option("--seed", c.seed, "random seed");
  invert->add_option("--det-guard", c.det_guard, "largest symbolic determinant dimension");
  invert->add_flag("--timing", c.timing, "include timings in the reports");

  std::size_t count = 50;
  std::string dir;
  auto* battery = app.add_subcommand("battery", "acceptance battery over random instances or a directory");
  battery->add_option("--seed", c.seed, "random seed");
  battery->add_option("--count", count, "number of random instances")->check(CLI::PositiveNumber);
  battery->add_option("--dir", dir, "directory of .hw instance files");
  battery->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
  battery->add_option("--field-guard", c.field_guard, "largest field size to build")->check(CLI::PositiveNumber);
  battery->add_flag("--json", c.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitInput;
  }

  try {
    if (*matrix) return run_matrix(c);
    if (*zeta) return run_zeta(c);
    if (*verify) return run_verify(c, check);
    if (*hypergeom) return run_hypergeom(c);
    if (*invert) return run_invertibility(c, inv_n, inv_d, inv_p);
    if (*battery) return run_battery(c, count, dir);
  } catch (const hwm::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const hwm::InternalError& e) {
    std::cerr << "internal error " << e.code() << ": " << e.witness() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}
