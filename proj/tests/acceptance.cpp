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

// Acceptance run: one PASS/FAIL line per criterion, each at its stated
// tolerance and time budget. Usage: acceptance <path to hwm binary>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hwm/battery.hpp"
#include "hwm/errors.hpp"
#include "hwm/hwmatrix.hpp"
#include "hwm/verify.hpp"
#include "hwm/zeta.hpp"

namespace {

using namespace hwm;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [" << what << "]";
    }
  }
};

BigInt ipow(std::uint64_t b, std::size_t e) {
  BigInt r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

HypersurfaceSpec fermat_cubic(std::uint32_t p) {
  const auto F = make_field(p, 1);
  return make_spec(p, 1, 2, 3, {{{3, 0, 0}, F->one()}, {{0, 3, 0}, F->one()}, {{0, 0, 3}, F->one()}});
}

// Coefficient of (x0 x1 x2)^{p-1} in (x0^3 + x1^3 + x2^3)^{p-1}, mod p,
// straight from the multinomial theorem.
std::uint32_t fermat_hw_entry(std::uint32_t p) {
  const int e = static_cast<int>(p) - 1;
  if (e % 3 != 0) return 0;
  const int k = e / 3;
  return static_cast<std::uint32_t>(factorial(e) / (factorial(k) * factorial(k) * factorial(k)) % p);
}

std::vector<std::uint32_t> padded(std::vector<std::uint32_t> v, std::size_t len) {
  v.resize(len, 0);
  return v;
}

std::vector<std::uint32_t> json_u32(const Json& j) { return j.get<std::vector<std::uint32_t>>(); }

// Criteria 1 and 2 share this: the 1x1 matrix, det(I - tM) and the
// count-side series to t^5.
void fermat_case(Outcome& out, std::uint32_t p) {
  const HypersurfaceSpec spec = fermat_cubic(p);
  const SymbolicMatrix sym = symbolic_matrix(spec, IndexSubset::full(2));
  const auto lambda = spec.coefficients();
  const EvaluatedMatrix A = evaluate(sym, lambda);
  const std::uint32_t entry = fermat_hw_entry(p);
  out.require(A.dim() == 1 && A.entries(0, 0) == spec.field->from_int(entry),
              "A entry for p=" + std::to_string(p));
  const FpPoly det = char_poly_rev(frobenius_product(spec, IndexSubset::full(2)));
  // For a 1x1 matrix over F_p, det(I - tM) = 1 - M t.
  std::vector<std::uint32_t> expected_det{1};
  if (entry != 0) expected_det.push_back((p - entry) % p);
  out.require(det.coeffs == expected_det, "det for p=" + std::to_string(p));

  VerifyOptions o;
  o.series_order = 5;
  const Report r = check_main_congruence(spec, o);
  out.require(r.pass, "main congruence for p=" + std::to_string(p));
  out.require(json_u32(r.details["scaled_mod_p"]) == padded(expected_det, 6),
              "count-side series for p=" + std::to_string(p));
  out.require(r.details["point_counts"].size() == 5, "five point counts");
}

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<void(Outcome&)> body;
};

std::string run_capture(const std::string& command, int* status) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    *status = -1;
    return output;
  }
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  *status = pclose(pipe);
  return output;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "hwm";

  BatteryResult battery;
  std::vector<BatteryInstance> battery_instances;

  std::vector<Criterion> criteria;

  criteria.push_back({1, "supersingular Fermat cubic over F_2 and F_5", 1.0, [](Outcome& out) {
                        fermat_case(out, 2);
                        fermat_case(out, 5);
                      }});

  criteria.push_back({2, "ordinary Fermat cubic over F_7", 1.0, [](Outcome& out) {
                        out.require(factorial(6) / (factorial(2) * factorial(2) * factorial(2)) % 7 == 6,
                                    "multinomial value");
                        fermat_case(out, 7);
                      }});

  criteria.push_back({3, "two lines x1*x2 over F_2, F_3, F_4", 3.0, [](Outcome& out) {
                        for (auto [p, a] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
                          const auto F = make_field(p, a);
                          const HypersurfaceSpec spec = make_spec(p, a, 2, 2, {{{0, 1, 1}, F->one()}});
                          const std::uint64_t q = spec.q();
                          const auto counts = point_counts(spec, 5);
                          for (std::size_t k = 1; k <= 5; ++k)
                            out.require(BigInt(counts[k - 1]) == 2 * ipow(q, k) + 1, "N_k closed form");
                          const ExactSeries P = p_series(zeta_series(counts), spec);
                          for (std::size_t m = 0; m <= 5; ++m)
                            out.require(P.coeffs.at(m) == ipow(q, m), "P = 1/(1 - qt) for q=" + std::to_string(q));
                          VerifyOptions o;
                          o.series_order = 5;
                          out.require(check_divisible_case(spec, o).pass, "divisible case for q=" + std::to_string(q));
                        }
                      }});

  criteria.push_back({4, "random full quadric surfaces over F_3 and F_9", 120.0, [](Outcome& out) {
                        std::mt19937_64 rng(4);
                        int tested = 0;
                        for (std::uint32_t a : {1u, 2u}) {
                          const auto F = make_field(3, a);
                          for (int rep = 0; rep < 10; ++rep) {
                            std::vector<Term> terms;
                            bool any = false;
                            while (!any) {
                              terms.clear();
                              for (const auto& m : all_monomials(3, 2)) {
                                terms.push_back({m, F->element(rng() % F->size())});
                                any = any || !terms.back().coeff.is_zero();
                              }
                            }
                            const HypersurfaceSpec spec = make_spec(3, a, 3, 2, terms);
                            VerifyOptions o;
                            o.series_order = 4;
                            const Report r = check_main_congruence(spec, o);
                            ++tested;
                            out.require(spec.mu() == 1 && r.details["matrix_dim"] == 1, "mu = 1, |U_min| = 1");
                            out.require(r.pass, "congruence, " + serialize_spec(spec));
                            const auto& cs = r.details["p_series"];
                            const BigInt qmu = ipow(spec.q(), 1);
                            BigInt need = 1;
                            for (std::size_t m = 0; m < cs.size(); ++m) {
                              const BigInt c(cs[m].get<std::string>());
                              out.require(c % need == 0, "Ax divisibility at m=" + std::to_string(m));
                              need *= qmu;
                            }
                          }
                        }
                        out.note << " instances=" << tested;
                      }});

  criteria.push_back({5, "randomized battery, seed 42, 50 instances", 600.0, [&](Outcome& out) {
                        battery_instances = random_instances(42, 50);
                        battery = run_battery(battery_instances);
                        const Json& s = battery.report["summary"];
                        out.require(!battery.internal_error, "internal invariant tripped");
                        out.require(s["instances"].get<int>() >= 50, "at least 50 instances");
                        out.require(s["by_check"]["congruence"]["run"] == s["instances"] &&
                                        s["by_check"]["congruence"]["passed"] == s["instances"],
                                    "every congruence passes");
                        for (const auto& inst : battery.report["instances"]) {
                          const auto& e = inst["instance"];
                          const auto p = e["p"].get<int>();
                          const auto a = e["a"].get<int>();
                          const auto n = e["n"].get<int>();
                          out.require((p == 2 || p == 3 || p == 5) && (a == 1 || a == 2) && (n == 2 || n == 3),
                                      "parameter ranges");
                          out.require(e["terms"].size() == all_monomials(n, e["d"].get<int>()).size(),
                                      "full-monomial support");
                        }
                        for (const auto& b : battery_instances) {
                          const std::size_t dim = enumerate_u_min(IndexSubset::full(b.spec.n), b.spec.n, b.spec.d).size();
                          for (const auto& inst : battery.report["instances"])
                            if (inst["key"] == b.key) out.require(inst["series_order"] == dim + 2, "order |U_min| + 2");
                        }
                        out.note << " passed=" << s["passed"] << "/" << s["instances"];
                      }});

  criteria.push_back({6, "Hasse-Witt oracle on mu = 0 battery instances", 0.0, [&](Outcome& out) {
                        int mu0 = 0;
                        for (const auto& inst : battery.report["instances"]) {
                          if (inst["instance"]["mu"] != 0) continue;
                          ++mu0;
                          out.require(inst["checks"].contains("hw_oracle") && inst["checks"]["hw_oracle"]["pass"] == true,
                                      "oracle " + inst["key"].get<std::string>());
                        }
                        out.require(mu0 > 0, "battery has mu = 0 instances");
                        out.note << " mu0_instances=" << mu0;
                      }});

  criteria.push_back({7, "Euler and box operators on every battery instance", 0.0, [&](Outcome& out) {
                        const Json& s = battery.report["summary"];
                        for (const char* check : {"euler", "box"}) {
                          out.require(s["by_check"][check]["run"] == s["instances"] &&
                                          s["by_check"][check]["passed"] == s["instances"],
                                      std::string(check) + " on all instances");
                        }
                      }});

  criteria.push_back({8, "generic invertibility for 9 (n, d, p)", 60.0, [](Outcome& out) {
                        for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
                          for (std::uint32_t p : {2u, 3u, 5u}) {
                            VerifyOptions o;
                            o.trials = 20;
                            const Report r = check_generic_invertibility(IndexSubset::full(n), n, d, p, o);
                            const std::string tag = "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                                    " p=" + std::to_string(p);
                            out.require(r.pass, tag);
                            out.require(r.details["distinguished_coefficient"] == 1, "coefficient " + tag);
                            out.require(!r.details["first_nonzero_trial"].is_null() &&
                                            r.details["first_nonzero_trial"].get<int>() <= 20,
                                        "nonzero evaluation " + tag);
                          }
                        }
                      }});

  criteria.push_back({9, "battery --seed 42 output is byte-identical across runs", 0.0, [&](Outcome& out) {
                        const std::string cmd = "'" + cli + "' battery --seed 42 --json";
                        int st1 = 0, st2 = 0;
                        const std::string first = run_capture(cmd, &st1);
                        const std::string second = run_capture(cmd + " --workers 2", &st2);
                        out.require(st1 == 0 && st2 == 0, "battery exit status");
                        out.require(!first.empty() && first == second, "identical bytes");
                        out.require(first == battery.report.dump(2) + "\n", "matches in-process report");
                      }});

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(out);
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << " [exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      out.ok = false;
      out.note << " [over time budget " << c.budget_seconds << " s]";
    }
    if (!out.ok) ++failed;
    std::printf("%s criterion %d: %s (%.2f s)%s\n", out.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                out.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
