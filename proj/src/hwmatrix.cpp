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

#include "hwm/hwmatrix.hpp"

#include "hwm/errors.hpp"
#include "hwm/modp.hpp"
#include "hwm/parallel.hpp"

namespace hwm {

std::string FpPoly::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += std::to_string(coeffs[k]);
      continue;
    }
    if (coeffs[k] != 1) out += std::to_string(coeffs[k]) + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

namespace {

SparseModPoly sum_over_nu(std::span<const int> target, const MonomialSupport& support, std::uint32_t p, int sign_exp) {
  SparseModPoly poly(p, support.size());
  const std::uint32_t sign = (sign_exp % 2 == 0) ? 1 : p - 1;
  for (const auto& nu : solve_nu(target, support, static_cast<int>(p) - 1)) {
    std::uint32_t denom = 1;
    for (int v : nu) denom = modp::mul(denom, modp::factorial(static_cast<std::uint32_t>(v), p), p);
    poly.add_term(SparseModPoly::Exponent(nu.begin(), nu.end()), modp::mul(sign, modp::inv(denom, p), p));
  }
  return poly;
}

}  // namespace

SparseModPoly symbolic_entry(const LatticePoint& u, const LatticePoint& v, const MonomialSupport& support,
                             std::uint32_t p, IndexSubset subset) {
  if (u.coords.size() != v.coords.size()) throw InputError("lattice points of different dimension");
  std::vector<int> target(u.coords.size());
  for (std::size_t i = 0; i < target.size(); ++i) target[i] = static_cast<int>(p) * u.coords[i] - v.coords[i];
  return sum_over_nu(target, support, p, mu_of(subset, support.d) + 1);
}

SymbolicMatrix symbolic_matrix(const MonomialSupport& support, std::uint32_t p, IndexSubset subset, unsigned workers) {
  SymbolicMatrix m;
  m.subset = subset;
  m.mu = mu_of(subset, support.d);
  m.index = enumerate_u_min(subset, support.n, support.d);
  const std::size_t dim = m.index.size();
  m.entries = Matrix<SparseModPoly>(dim, dim, SparseModPoly(p, support.size()));
  parallel_for(dim * dim, workers, [&](std::size_t k) {
    const std::size_t i = k / dim;
    const std::size_t j = k % dim;
    m.entries(i, j) = symbolic_entry(m.index[i], m.index[j], support, p, subset);
  });
  return m;
}

EvaluatedMatrix evaluate(const SymbolicMatrix& m, std::span<const FieldElement> point) {
  EvaluatedMatrix out;
  out.index = m.index;
  out.entries = map_entries(m.entries, [&](const SparseModPoly& f) { return f.evaluate(point); });
  return out;
}

std::vector<FieldElement> twist(std::span<const FieldElement> point, std::uint32_t i) {
  std::vector<FieldElement> out(point.begin(), point.end());
  for (auto& x : out)
    for (std::uint32_t k = 0; k < i; ++k) x = frobenius(x);
  return out;
}

EvaluatedMatrix frobenius_product(const SymbolicMatrix& m, std::span<const FieldElement> point, std::uint32_t a) {
  EvaluatedMatrix acc = evaluate(m, point);
  for (std::uint32_t i = 1; i < a; ++i) {
    const auto twisted = twist(point, i);
    acc.entries = evaluate(m, twisted).entries * acc.entries;
  }
  return acc;
}

EvaluatedMatrix frobenius_product(const HypersurfaceSpec& spec, IndexSubset subset) {
  return frobenius_product(symbolic_matrix(spec, subset), spec.coefficients(), spec.a);
}

std::vector<FieldElement> char_poly_rev_coeffs(const Matrix<FieldElement>& m) {
  if (!m.square() || m.rows() == 0) throw InputError("char_poly_rev needs a nonempty square matrix");
  const std::size_t n = m.rows();
  if (n <= kCofactorMaxDim) {
    const FieldElement one = one_like(m(0, 0));
    const FieldElement zero = zero_like(one);
    using P = UPoly<FieldElement>;
    Matrix<P> tm(n, n, P(zero));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) tm(i, j) = P(std::vector<FieldElement>{i == j ? one : zero, -m(i, j)});
    P det = det_cofactor(tm);
    std::vector<FieldElement> out(n + 1, zero);
    for (std::size_t k = 0; k <= n; ++k) out[k] = det.coeff(k);
    return out;
  }
  return berkowitz_rev_charpoly(m);
}

FpPoly char_poly_rev(const EvaluatedMatrix& m) {
  const auto coeffs = char_poly_rev_coeffs(m.entries);
  const std::uint32_t p = coeffs[0].ctx()->characteristic();
  FpPoly out{p, {}};
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const FieldElement& c = coeffs[k];
    if (frobenius(c) != c || c.code() >= p)
      throw InternalError("FROBENIUS-FIXEDNESS", "coefficient of t^" + std::to_string(k) + " is " +
                                                     format_element(c) + ", not in F_p");
    out.coeffs.push_back(c.code());
  }
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  if (out.coeffs.empty() || out.coeffs[0] != 1)
    throw InternalError("CHARPOLY-CONSTANT", "constant term of det(I - tM) is not 1");
  return out;
}

std::vector<SparseModPoly> g_polynomials(const MonomialSupport& support, std::uint32_t p) {
  const int n = support.n;
  const int d = support.d;
  if (n % d != 0) throw InputError("g polynomials need d | n");
  const int mu = (n + 1 + d - 1) / d - 1;
  std::vector<SparseModPoly> out;
  for (int i = 0; i <= n; ++i) {
    std::vector<int> target(n + 2, static_cast<int>(p) - 1);
    target[i] = 0;
    target[n + 1] = (static_cast<int>(p) - 1) * mu;
    out.push_back(sum_over_nu(target, support, p, mu));
  }
  return out;
}

}  // namespace hwm
