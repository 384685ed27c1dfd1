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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hwm/dense.hpp"
#include "hwm/instance.hpp"
#include "hwm/lattice.hpp"
#include "hwm/sparse_poly.hpp"

namespace hwm {

/// Polynomial over F_p in t, low degree first, trailing zeros trimmed.
struct FpPoly {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::string to_string() const;
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
};

/// A^I(Lambda) reduced mod p, rows and columns indexed by sorted U^I_min.
struct SymbolicMatrix {
  IndexSubset subset;
  int mu = 0;
  std::vector<LatticePoint> index;
  Matrix<SparseModPoly> entries;

  std::size_t dim() const noexcept { return index.size(); }
};

struct EvaluatedMatrix {
  std::vector<LatticePoint> index;
  Matrix<FieldElement> entries;

  std::size_t dim() const noexcept { return index.size(); }
};

/// (-1)^{mu_I+1} sum_nu Lambda^nu / nu! over sum_j nu_j a_j^+ = p u - v, mod p.
SparseModPoly symbolic_entry(const LatticePoint& u, const LatticePoint& v, const MonomialSupport& support,
                             std::uint32_t p, IndexSubset subset);

SymbolicMatrix symbolic_matrix(const MonomialSupport& support, std::uint32_t p, IndexSubset subset,
                               unsigned workers = 1);
inline SymbolicMatrix symbolic_matrix(const HypersurfaceSpec& spec, IndexSubset subset, unsigned workers = 1) {
  return symbolic_matrix(spec.support(), spec.p, subset, workers);
}

EvaluatedMatrix evaluate(const SymbolicMatrix& m, std::span<const FieldElement> point);

/// lambda -> lambda^{p^i} coordinatewise.
std::vector<FieldElement> twist(std::span<const FieldElement> point, std::uint32_t i);

/// A(lambda^{p^{a-1}}) ... A(lambda^p) A(lambda), highest twist leftmost.
EvaluatedMatrix frobenius_product(const SymbolicMatrix& m, std::span<const FieldElement> point, std::uint32_t a);
EvaluatedMatrix frobenius_product(const HypersurfaceSpec& spec, IndexSubset subset);

/// Largest dimension for which determinants use Laplace expansion.
inline constexpr std::size_t kCofactorMaxDim = 6;

/// det(I - tM). Every coefficient must be fixed by x -> x^p; otherwise
/// InternalError "FROBENIUS-FIXEDNESS" is raised.
FpPoly char_poly_rev(const EvaluatedMatrix& m);
/// Same coefficients over F_q without the prime-field check, for tests.
std::vector<FieldElement> char_poly_rev_coeffs(const Matrix<FieldElement>& m);

/// g_i(Lambda) for i = 0..n (requires d | n).
std::vector<SparseModPoly> g_polynomials(const MonomialSupport& support, std::uint32_t p);
inline std::vector<SparseModPoly> g_polynomials(const HypersurfaceSpec& spec) {
  return g_polynomials(spec.support(), spec.p);
}

}  // namespace hwm
