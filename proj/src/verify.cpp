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

#include "hwm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>

#include "hwm/errors.hpp"
#include "hwm/modp.hpp"

namespace hwm {
namespace {

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Json point_json(const LatticePoint& u) { return Json(u.coords); }

std::string monomial_string(std::span<const int> exps) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s.empty() ? "1" : s;
}

std::vector<IndexSubset> hypergeometric_subsets(int n) {
  std::vector<IndexSubset> out{IndexSubset::full(n)};
  for (int i = 0; i <= n; ++i) out.push_back(IndexSubset::full(n).without(i));
  return out;
}

std::size_t series_order(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  return options.series_order ? options.series_order : default_series_order(spec);
}

Report congruence(const HypersurfaceSpec& spec, const VerifyOptions& options, bool divisible) {
  Stopwatch clock;
  require_nondegenerate(spec);
  Report r;
  r.check = divisible ? "divisible" : "main";
  r.instance = instance_echo(spec);
  const std::uint32_t p = spec.p;
  const std::size_t order = series_order(spec, options);

  const SymbolicMatrix sym = symbolic_matrix(spec, IndexSubset::full(spec.n), options.workers);
  const std::vector<FieldElement> lambda = spec.coefficients();
  const FpPoly det = char_poly_rev(frobenius_product(sym, lambda, spec.a));
  SeriesModP matrix_side = series_from_poly(p, det.coeffs, order);

  Json g_products = Json::array();
  if (divisible) {
    SeriesModP denominator = series_from_poly(p, {1}, order);
    for (const SparseModPoly& g : g_polynomials(spec)) {
      FieldElement prod = spec.field->one();
      for (std::uint32_t s = 0; s < spec.a; ++s) prod *= g.evaluate(twist(lambda, s));
      if (prod.code() >= p)
        throw InternalError("FROBENIUS-FIXEDNESS", "g product " + format_element(prod) + " is not in F_p");
      g_products.push_back(prod.code());
      denominator = mul_trunc(denominator, series_from_poly(p, {1, (p - prod.code()) % p}, order), order);
    }
    matrix_side = mul_trunc(matrix_side, inverse(denominator, order), order);
  }

  const CountOptions count_options{options.workers, options.field_guard, options.work_guard};
  const std::vector<std::uint64_t> counts = point_counts(spec, order, count_options);
  const ExactSeries P = p_series(zeta_series(counts), spec);
  const SeriesModP count_side = scale_and_reduce(P, spec);

  r.pass = true;
  for (std::size_t m = 0; m <= order; ++m) {
    if (count_side.coeffs[m] != matrix_side.coeffs[m]) {
      r.pass = false;
      r.witness = {{"index", m}, {"point_count_side", count_side.coeffs[m]}, {"matrix_side", matrix_side.coeffs[m]}};
      break;
    }
  }
  r.details["series_order"] = order;
  r.details["matrix_dim"] = sym.dim();
  r.details["det"] = det.to_string();
  r.details["det_coeffs"] = det.coeffs;
  if (divisible) r.details["g_products"] = g_products;
  r.details["point_counts"] = counts;
  r.details["p_series"] = P.to_strings();
  r.details["scaled_mod_p"] = count_side.coeffs;
  r.details["matrix_series_mod_p"] = matrix_side.coeffs;
  r.seconds = clock.seconds();
  return r;
}

std::optional<Json> euler_violation(const SparseModPoly& entry, const MonomialSupport& support, std::uint32_t p,
                                    const LatticePoint& u, const LatticePoint& v) {
  const std::size_t rows = u.coords.size();
  for (const auto& [nu, c] : entry.terms()) {
    for (std::size_t i = 0; i < rows; ++i) {
      std::int64_t lhs = 0;
      for (std::size_t j = 0; j < support.size(); ++j) lhs += std::int64_t{support.vectors[j][i]} * nu[j];
      const std::int64_t rhs = std::int64_t{p} * u.coords[i] - v.coords[i];
      if ((lhs - rhs) % static_cast<std::int64_t>(p) != 0)
        return Json{{"nu", nu}, {"row", i}, {"lhs", lhs}, {"rhs", rhs}};
    }
  }
  return std::nullopt;
}

SparseModPoly differentiate(SparseModPoly f, const RelationVector& l, int sign) {
  for (std::size_t j = 0; j < l.size() && !f.empty(); ++j) {
    const std::int64_t order = sign * l[j];
    if (order > 0) f = f.derivative(j, static_cast<std::uint32_t>(order));
  }
  return f;
}

std::optional<Json> box_violation(const SparseModPoly& entry, const RelationVector& l) {
  const SparseModPoly diff = differentiate(entry, l, 1) - differentiate(entry, l, -1);
  if (diff.empty()) return std::nullopt;
  return Json{{"l", l}, {"residual", diff.to_string()}};
}

Json entry_location(IndexSubset subset, const LatticePoint& u, const LatticePoint& v) {
  return Json{{"subset", subset.to_string()}, {"u", point_json(u)}, {"v", point_json(v)}};
}

std::vector<RelationVector> box_test_set(const MonomialSupport& support) {
  std::vector<RelationVector> basis = relation_lattice_basis(support);
  std::vector<RelationVector> out = basis;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      RelationVector s(basis[i].size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = basis[i][k] + basis[j][k];
      out.push_back(std::move(s));
    }
  }
  return out;
}

Json arrangement_echo(const Arrangement& arr, std::uint32_t p) {
  Json prefix = Json::array();
  const std::size_t used = static_cast<std::size_t>(arr.mu) + arr.u_min.size();
  for (std::size_t j = 0; j < used; ++j)
    prefix.push_back(monomial_string(std::span(arr.support.vectors[j]).first(arr.n + 1)));
  return Json{{"p", p},           {"n", arr.n},  {"d", arr.d}, {"subset", arr.subset.to_string()},
              {"mu", arr.mu},     {"permutation", arr.permutation}, {"support_prefix", prefix},
              {"terms", arr.support.size()}};
}

}  // namespace

Json to_json(const Report& report, bool with_timing) {
  Json j{{"check", report.check}, {"pass", report.pass}, {"skipped", report.skipped},
         {"instance", report.instance}, {"witness", report.witness}, {"details", report.details},
         {"warnings", report.warnings}};
  if (with_timing) j["seconds"] = report.seconds;
  return j;
}

Json instance_echo(const HypersurfaceSpec& spec) {
  Json terms = Json::array();
  for (const auto& t : spec.terms) terms.push_back({{"exponents", t.exponents}, {"coeff", format_element(t.coeff)}});
  return Json{{"p", spec.p},   {"a", spec.a},   {"q", spec.q()},
              {"n", spec.n},   {"d", spec.d},   {"mu", spec.mu()},
              {"modulus", spec.field->modulus_string()}, {"terms", terms}};
}

void require_nondegenerate(const HypersurfaceSpec& spec) {
  if (spec.all_coefficients_zero())
    throw InputError("all coefficients are zero, so f = 0 and the zeta factor P is undefined");
}

Report check_main_congruence(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  if (spec.n % spec.d == 0) throw InputError("d divides n: use the divisible check");
  return congruence(spec, options, false);
}

Report check_divisible_case(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  if (spec.n % spec.d != 0) throw InputError("d does not divide n: use the main check");
  return congruence(spec, options, true);
}

Report check_congruence(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  return congruence(spec, options, spec.n % spec.d == 0);
}

Matrix<FieldElement> classical_hw_oracle(const HypersurfaceSpec& spec) {
  if (spec.mu() != 0) throw InputError("the classical Hasse-Witt oracle needs mu = 0");
  const FieldCtx& F = *spec.field;
  std::map<std::vector<int>, FieldElement> power{{std::vector<int>(spec.n + 1, 0), F.one()}};
  for (std::uint32_t e = 1; e < spec.p; ++e) {
    std::map<std::vector<int>, FieldElement> next;
    for (const auto& [mono, c] : power) {
      for (const auto& t : spec.terms) {
        std::vector<int> m = mono;
        for (int i = 0; i <= spec.n; ++i) m[i] += t.exponents[i];
        auto [it, fresh] = next.try_emplace(m, F.zero());
        it->second += c * t.coeff;
      }
    }
    power = std::move(next);
  }
  const auto index = enumerate_u_min(IndexSubset::full(spec.n), spec.n, spec.d);
  Matrix<FieldElement> out(index.size(), index.size(), F.zero());
  for (std::size_t r = 0; r < index.size(); ++r) {
    for (std::size_t c = 0; c < index.size(); ++c) {
      std::vector<int> target(spec.n + 1);
      for (int i = 0; i <= spec.n; ++i)
        target[i] = static_cast<int>(spec.p) * index[r].coords[i] - index[c].coords[i];
      if (auto it = power.find(target); it != power.end()) out(r, c) = it->second;
    }
  }
  return out;
}

Report check_hw_oracle(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  Stopwatch clock;
  Report r;
  r.check = "hw-oracle";
  r.instance = instance_echo(spec);
  const Matrix<FieldElement> oracle = classical_hw_oracle(spec);
  const SymbolicMatrix sym = symbolic_matrix(spec, IndexSubset::full(spec.n), options.workers);
  const EvaluatedMatrix ev = evaluate(sym, spec.coefficients());
  r.pass = true;
  Json rows = Json::array();
  for (std::size_t i = 0; i < ev.dim(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < ev.dim(); ++j) {
      row.push_back(format_element(ev.entries(i, j)));
      if (r.pass && !(ev.entries(i, j) == oracle(i, j))) {
        r.pass = false;
        r.witness = entry_location(sym.subset, ev.index[i], ev.index[j]);
        r.witness["matrix"] = format_element(ev.entries(i, j));
        r.witness["oracle"] = format_element(oracle(i, j));
      }
    }
    rows.push_back(row);
  }
  r.details["matrix"] = rows;
  r.seconds = clock.seconds();
  return r;
}

Report check_euler(const HypersurfaceSpec& spec, IndexSubset subset, const LatticePoint& u, const LatticePoint& v) {
  Report r;
  r.check = "euler";
  r.instance = instance_echo(spec);
  const MonomialSupport support = spec.support();
  const SparseModPoly entry = symbolic_entry(u, v, support, spec.p, subset);
  const auto bad = euler_violation(entry, support, spec.p, u, v);
  r.pass = !bad;
  if (bad) r.witness = entry_location(subset, u, v), r.witness["violation"] = *bad;
  r.details["monomials"] = entry.size();
  return r;
}

Report check_box(const HypersurfaceSpec& spec, IndexSubset subset, const LatticePoint& u, const LatticePoint& v,
                 const RelationVector& l) {
  const MonomialSupport support = spec.support();
  if (l.size() != support.size() || !is_relation(l, support)) throw InputError("l is not a relation vector");
  Report r;
  r.check = "box";
  r.instance = instance_echo(spec);
  const SparseModPoly entry = symbolic_entry(u, v, support, spec.p, subset);
  const auto bad = box_violation(entry, l);
  r.pass = !bad;
  if (bad) r.witness = entry_location(subset, u, v), r.witness["violation"] = *bad;
  return r;
}

Report check_euler_all(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  Stopwatch clock;
  Report r;
  r.check = "euler";
  r.instance = instance_echo(spec);
  r.pass = true;
  const MonomialSupport support = spec.support();
  std::size_t entries = 0;
  for (IndexSubset subset : hypergeometric_subsets(spec.n)) {
    const SymbolicMatrix sym = symbolic_matrix(support, spec.p, subset, options.workers);
    for (std::size_t i = 0; i < sym.dim() && r.pass; ++i) {
      for (std::size_t j = 0; j < sym.dim() && r.pass; ++j) {
        ++entries;
        if (auto bad = euler_violation(sym.entries(i, j), support, spec.p, sym.index[i], sym.index[j])) {
          r.pass = false;
          r.witness = entry_location(subset, sym.index[i], sym.index[j]);
          r.witness["violation"] = *bad;
        }
      }
    }
    if (!r.pass) break;
  }
  r.details["entries_checked"] = entries;
  r.seconds = clock.seconds();
  return r;
}

Report check_box_all(const HypersurfaceSpec& spec, const VerifyOptions& options) {
  Stopwatch clock;
  Report r;
  r.check = "box";
  r.instance = instance_echo(spec);
  r.pass = true;
  const MonomialSupport support = spec.support();
  const std::vector<RelationVector> tests = box_test_set(support);
  std::size_t applications = 0;
  for (IndexSubset subset : hypergeometric_subsets(spec.n)) {
    const SymbolicMatrix sym = symbolic_matrix(support, spec.p, subset, options.workers);
    for (std::size_t i = 0; i < sym.dim() && r.pass; ++i) {
      for (std::size_t j = 0; j < sym.dim() && r.pass; ++j) {
        for (const auto& l : tests) {
          ++applications;
          if (auto bad = box_violation(sym.entries(i, j), l)) {
            r.pass = false;
            r.witness = entry_location(subset, sym.index[i], sym.index[j]);
            r.witness["violation"] = *bad;
            break;
          }
        }
      }
    }
    if (!r.pass) break;
  }
  r.details["relations_tested"] = tests.size();
  r.details["applications"] = applications;
  r.seconds = clock.seconds();
  return r;
}

MonomialSupport full_support(int n, int d) {
  MonomialSupport s{n, d, {}};
  for (const auto& m : all_monomials(n, d)) s.vectors.push_back(augment(m));
  return s;
}

Arrangement construct_arrangement(IndexSubset subset, const MonomialSupport& support) {
  const int n = support.n;
  const int d = support.d;
  if (subset.empty()) throw InputError("the arrangement needs a nonempty subset");
  if (subset.mask() >> (n + 1)) throw InputError("subset " + subset.to_string() + " is not inside {0..n}");
  Arrangement arr;
  arr.subset = subset;
  arr.n = n;
  arr.d = d;
  arr.mu = mu_of(subset, d);
  arr.permutation = subset.indices();
  for (int i = 0; i <= n; ++i)
    if (!subset.contains(i)) arr.permutation.push_back(i);
  const int h = subset.size();

  std::vector<std::vector<int>> wanted;
  for (int j = 0; j < arr.mu; ++j) {
    std::vector<int> block(n + 1, 0);
    for (int c = j * d; c < (j + 1) * d; ++c) block[arr.permutation[c]] = 1;
    wanted.push_back(std::move(block));
  }
  const std::size_t blocks = wanted.size();
  for (const auto& m : all_monomials(n, d)) {
    bool divisible = true;
    for (int c = arr.mu * d; c < h && divisible; ++c) divisible = m[arr.permutation[c]] > 0;
    if (divisible) wanted.push_back(m);
  }

  std::vector<bool> used(support.size(), false);
  for (const auto& m : wanted) {
    std::size_t found = support.size();
    for (std::size_t j = 0; j < support.size() && found == support.size(); ++j)
      if (std::equal(m.begin(), m.end(), support.vectors[j].begin())) found = j;
    if (found == support.size()) throw InputError("support lacks the monomial " + monomial_string(m));
    used[found] = true;
    arr.source_index.push_back(found);
  }
  for (std::size_t j = 0; j < support.size(); ++j)
    if (!used[j]) arr.source_index.push_back(j);
  arr.support = MonomialSupport{n, d, {}};
  for (std::size_t j : arr.source_index) arr.support.vectors.push_back(support.vectors[j]);

  arr.u_min = enumerate_u_min(subset, n, d);
  const std::size_t distinguished = wanted.size() - blocks;
  if (arr.u_min.size() != distinguished)
    throw InternalError("ARRANGEMENT", std::to_string(distinguished) + " distinguished monomials for " +
                                              std::to_string(arr.u_min.size()) + " minimal points");
  std::vector<int> block_sum(n + 2, 0);
  for (std::size_t j = 0; j < blocks; ++j)
    for (int i = 0; i <= n + 1; ++i) block_sum[i] += arr.support.vectors[j][i];
  for (const auto& u : arr.u_min) {
    std::optional<std::size_t> k_u;
    for (std::size_t k = 0; k < distinguished; ++k) {
      bool match = true;
      for (int i = 0; i <= n + 1 && match; ++i)
        match = block_sum[i] + arr.support.vectors[blocks + k][i] == u.coords[i];
      if (!match) continue;
      if (k_u) throw InternalError("ARRANGEMENT", "two factorizations of a minimal point");
      k_u = k;
    }
    if (!k_u) throw InternalError("ARRANGEMENT", "a minimal point has no factorization");
    arr.k_of_u.push_back(*k_u);
  }
  return arr;
}

Arrangement construct_arrangement(IndexSubset subset, int n, int d) {
  return construct_arrangement(subset, full_support(n, d));
}

Report check_generic_invertibility(const Arrangement& arr, std::uint32_t p, const VerifyOptions& options) {
  Stopwatch clock;
  Report r;
  r.check = "invertibility";
  r.instance = arrangement_echo(arr, p);
  const SymbolicMatrix sym = symbolic_matrix(arr.support, p, arr.subset, options.workers);
  const std::size_t dim = sym.dim();
  const std::size_t nvars = arr.support.size();
  r.details["matrix_dim"] = dim;

  bool coefficient_ok = true;
  if (dim <= options.det_dim_guard) {
    const SparseModPoly det = det_cofactor(sym.entries);
    SparseModPoly::Exponent e(nvars, 0);
    for (int j = 0; j < arr.mu; ++j) e[j] = static_cast<std::int32_t>((p - 1) * dim);
    for (std::size_t k = 0; k < dim; ++k) e[arr.mu + k] = static_cast<std::int32_t>(p - 1);
    const std::uint32_t coeff = det.coefficient(e);
    coefficient_ok = coeff == 1;
    r.details["det_terms"] = det.size();
    r.details["distinguished_exponent"] = e;
    r.details["distinguished_coefficient"] = coeff;
    if (!coefficient_ok) r.witness = {{"sub_check", "coefficient"}, {"exponent", e}, {"coefficient", coeff}};
  } else {
    r.warnings.push_back("dimension " + std::to_string(dim) + " exceeds the determinant guard; coefficient check skipped");
    r.details["distinguished_coefficient"] = nullptr;
  }

  const FieldPtr big = make_field(p, 6, options.field_guard);
  std::mt19937_64 rng(options.seed);
  std::optional<unsigned> hit;
  for (unsigned t = 1; t <= options.trials && !hit; ++t) {
    std::vector<FieldElement> point;
    for (std::size_t j = 0; j < nvars; ++j) point.push_back(big->element(static_cast<std::uint32_t>(rng() % big->size())));
    if (!det_gauss(evaluate(sym, point).entries).is_zero()) hit = t;
  }
  r.details["trials"] = options.trials;
  r.details["first_nonzero_trial"] = hit ? Json(*hit) : Json(nullptr);
  if (!hit && coefficient_ok)
    r.witness = {{"sub_check", "schwartz_zippel"}, {"trials", options.trials},
                 {"message", "identically zero under Schwartz-Zippel sample"}};
  r.pass = coefficient_ok && hit.has_value();
  r.seconds = clock.seconds();
  return r;
}

Report check_generic_invertibility(IndexSubset subset, int n, int d, std::uint32_t p, const VerifyOptions& options) {
  return check_generic_invertibility(construct_arrangement(subset, n, d), p, options);
}

Report constant_term_separation(const Arrangement& arr, std::uint32_t p, const VerifyOptions& options) {
  Stopwatch clock;
  Report r;
  r.check = "constant-term";
  r.instance = arrangement_echo(arr, p);
  const SymbolicMatrix sym = symbolic_matrix(arr.support, p, arr.subset, options.workers);
  const std::size_t dim = sym.dim();
  if (dim > options.det_dim_guard)
    throw InputError("dimension " + std::to_string(dim) + " exceeds the determinant guard");
  const std::size_t nvars = arr.support.size();
  const auto& index = sym.index;
  auto k_of = [&](const LatticePoint& u) {
    const auto pos = std::find(arr.u_min.begin(), arr.u_min.end(), u) - arr.u_min.begin();
    return arr.k_of_u[pos];
  };

  r.pass = true;
  Matrix<SparseModPoly> D(dim, dim, SparseModPoly(p, nvars));
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t ku = arr.mu + k_of(index[i]);
    for (std::size_t j = 0; j < dim; ++j) {
      const std::size_t kv = arr.mu + k_of(index[j]);
      SparseModPoly::Exponent shift(nvars, 0);
      for (int b = 0; b < arr.mu; ++b) shift[b] = -static_cast<std::int32_t>(p - 1);
      shift[ku] -= static_cast<std::int32_t>(p);
      shift[kv] += 1;
      D(i, j) = sym.entries(i, j).shifted(shift);
      // Every monomial of D_uv lies in L_u.
      for (const auto& [l, c] : D(i, j).terms()) {
        const std::vector<std::int64_t> l64(l.begin(), l.end());
        bool ok = is_relation(l64, arr.support);
        for (std::size_t k = 0; k < nvars && ok; ++k) {
          const bool nonpositive = k < static_cast<std::size_t>(arr.mu) || k == ku;
          ok = nonpositive ? l[k] <= 0 : l[k] >= 0;
        }
        if (!ok && r.pass) {
          r.pass = false;
          r.witness = entry_location(arr.subset, index[i], index[j]);
          r.witness["monomial_outside_L_u"] = l;
        }
      }
      if (i != j && D(i, j).constant_term() != 0 && r.pass) {
        r.pass = false;
        r.witness = entry_location(arr.subset, index[i], index[j]);
        r.witness["off_diagonal_constant"] = D(i, j).constant_term();
      }
    }
  }
  std::uint32_t diagonal = 1;
  Json diagonal_terms = Json::array();
  for (std::size_t i = 0; i < dim; ++i) {
    diagonal_terms.push_back(D(i, i).constant_term());
    diagonal = modp::mul(diagonal, D(i, i).constant_term(), p);
  }
  const std::uint32_t constant = det_cofactor(D).constant_term();
  r.details["matrix_dim"] = dim;
  r.details["diagonal_constants"] = diagonal_terms;
  r.details["det_constant_term"] = constant;
  r.details["diagonal_product"] = diagonal;
  if (r.pass && constant != diagonal) {
    r.pass = false;
    r.witness = {{"det_constant_term", constant}, {"diagonal_product", diagonal}};
  }
  r.seconds = clock.seconds();
  return r;
}

Report constant_term_separation(IndexSubset subset, int n, int d, std::uint32_t p, const VerifyOptions& options) {
  return constant_term_separation(construct_arrangement(subset, n, d), p, options);
}

}  // namespace hwm
