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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hwm/dense.hpp"
#include "hwm/hwmatrix.hpp"
#include "hwm/instance.hpp"
#include "hwm/lattice.hpp"
#include "hwm/zeta.hpp"

namespace hwm {

using Json = nlohmann::ordered_json;

struct Report {
  std::string check;
  bool pass = false;
  /// Set when a check does not apply to the instance; skipped reports pass.
  bool skipped = false;
  Json instance;
  Json witness;  // null on success
  Json details = Json::object();
  std::vector<std::string> warnings;
  double seconds = 0.0;
};

/// JSON form of a report. Timing is left out unless asked for, so that
/// repeated runs produce identical bytes.
Json to_json(const Report& report, bool with_timing = false);

/// Echo of an instance: field data, modulus, degree, mu and the terms.
Json instance_echo(const HypersurfaceSpec& spec);

struct VerifyOptions {
  /// Series order K; 0 selects the default |U^S_min| + 3.
  std::size_t series_order = 0;
  unsigned trials = 20;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::uint64_t field_guard = kDefaultFieldGuard;
  std::uint64_t work_guard = std::uint64_t{1} << 36;
  /// Largest matrix for which symbolic determinants are expanded.
  std::size_t det_dim_guard = kCofactorMaxDim;
};

/// Rejects f = 0 (every lambda zero) with InputError.
void require_nondegenerate(const HypersurfaceSpec& spec);

/// P(q^-mu t) mod p against det(I - tM), for d not dividing n.
Report check_main_congruence(const HypersurfaceSpec& spec, const VerifyOptions& options = {});
/// P(q^-mu t) mod p against det(I - tM) / prod_i (1 - t g_i-product), for d | n.
Report check_divisible_case(const HypersurfaceSpec& spec, const VerifyOptions& options = {});
/// Whichever of the two applies.
Report check_congruence(const HypersurfaceSpec& spec, const VerifyOptions& options = {});

/// Entry (u, v) is the coefficient of x^{pu - v} in f^{p-1}; mu must be 0.
Matrix<FieldElement> classical_hw_oracle(const HypersurfaceSpec& spec);
Report check_hw_oracle(const HypersurfaceSpec& spec, const VerifyOptions& options = {});

/// Homogeneity of one entry of A^I: every monomial Lambda^nu satisfies
/// sum_j nu_j a_j^+ = pu - v mod p coordinatewise.
Report check_euler(const HypersurfaceSpec& spec, IndexSubset subset, const LatticePoint& u, const LatticePoint& v);
/// d^{l+} A^I_uv = d^{l-} A^I_uv for the relation l.
Report check_box(const HypersurfaceSpec& spec, IndexSubset subset, const LatticePoint& u, const LatticePoint& v,
                 const RelationVector& l);

/// Euler checks on every entry of A^S and every A^{S minus i}.
Report check_euler_all(const HypersurfaceSpec& spec, const VerifyOptions& options = {});
/// Box checks for each basis relation and each pairwise sum, on the same matrices.
Report check_box_all(const HypersurfaceSpec& spec, const VerifyOptions& options = {});

/// The arrangement of the support used for generic invertibility.
struct Arrangement {
  IndexSubset subset;
  int n = 0;
  int d = 0;
  int mu = 0;
  /// Relabeling: new coordinate c is old coordinate permutation[c].
  std::vector<int> permutation;
  /// The reordered support: mu blocks, then |U^I_min| distinguished monomials, then the rest.
  MonomialSupport support;
  /// support.vectors[j] is vector source_index[j] of the support passed in.
  std::vector<std::size_t> source_index;
  /// U^I_min (sorted) and for each point its k_u, 0-based among the distinguished monomials.
  std::vector<LatticePoint> u_min;
  std::vector<std::size_t> k_of_u;
};

/// Builds the arrangement inside `support`; InputError names any missing monomial.
Arrangement construct_arrangement(IndexSubset subset, const MonomialSupport& support);
/// Same, with the support of all degree-d monomials.
Arrangement construct_arrangement(IndexSubset subset, int n, int d);

MonomialSupport full_support(int n, int d);

Report check_generic_invertibility(const Arrangement& arrangement, std::uint32_t p, const VerifyOptions& options = {});
Report check_generic_invertibility(IndexSubset subset, int n, int d, std::uint32_t p,
                                   const VerifyOptions& options = {});

Report constant_term_separation(const Arrangement& arrangement, std::uint32_t p, const VerifyOptions& options = {});
Report constant_term_separation(IndexSubset subset, int n, int d, std::uint32_t p, const VerifyOptions& options = {});

}  // namespace hwm
