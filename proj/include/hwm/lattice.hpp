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

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hwm/instance.hpp"

namespace hwm {

/// Subset I of S = {0, ..., n} stored as a bitmask.
class IndexSubset {
 public:
  constexpr IndexSubset() = default;
  constexpr explicit IndexSubset(std::uint32_t mask) : mask_(mask) {}

  static IndexSubset full(int n) { return IndexSubset((std::uint32_t{1} << (n + 1)) - 1); }
  static IndexSubset of(std::span<const int> indices);

  std::uint32_t mask() const noexcept { return mask_; }
  bool contains(int i) const noexcept { return (mask_ >> i) & 1u; }
  int size() const noexcept { return std::popcount(mask_); }
  bool empty() const noexcept { return mask_ == 0; }
  IndexSubset without(int i) const { return IndexSubset(mask_ & ~(std::uint32_t{1} << i)); }
  std::vector<int> indices() const;
  std::string to_string() const;

  friend auto operator<=>(const IndexSubset&, const IndexSubset&) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// mu_I = ceil(|I| / d) - 1 (so mu of the empty set is -1).
int mu_of(IndexSubset subset, int d);

/// A point u of N^{n+2} on the hyperplane sum_{i<=n} u_i = d * u_{n+1}.
struct LatticePoint {
  std::vector<int> coords;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// The set U^I_min, sorted lexicographically (ascending).
std::vector<LatticePoint> enumerate_u_min(IndexSubset subset, int n, int d);

using NuVector = std::vector<int>;

/// All nu in N^N with sum_j nu_j a_j^+ = target, in backtracking order
/// (variables in term order, values descending). When `asserted_cap` is set,
/// any solution with an entry above it raises InternalError
/// "NU-BOUND"; the cap is checked, never used to prune.
std::vector<NuVector> solve_nu(std::span<const int> target, const MonomialSupport& support,
                               std::optional<int> asserted_cap = std::nullopt);

using RelationVector = std::vector<std::int64_t>;

/// Z-basis of {l in Z^N : sum_j l_j a_j^+ = 0} by unimodular column reduction.
std::vector<RelationVector> relation_lattice_basis(const MonomialSupport& support);
bool is_relation(std::span<const std::int64_t> l, const MonomialSupport& support);

}  // namespace hwm
