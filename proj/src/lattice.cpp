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

#include "hwm/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "hwm/errors.hpp"

namespace hwm {

IndexSubset IndexSubset::of(std::span<const int> indices) {
  std::uint32_t mask = 0;
  for (int i : indices) {
    if (i < 0 || i >= 31) throw InputError("subset index out of range");
    mask |= std::uint32_t{1} << i;
  }
  return IndexSubset(mask);
}

std::vector<int> IndexSubset::indices() const {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string IndexSubset::to_string() const {
  std::string out = "{";
  for (int i : indices()) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

int mu_of(IndexSubset subset, int d) {
  const int h = subset.size();
  return (h + d - 1) / d - 1;
}

std::vector<LatticePoint> enumerate_u_min(IndexSubset subset, int n, int d) {
  const int mu = mu_of(subset, d);
  const int total = d * (mu + 1);
  std::vector<LatticePoint> out;
  std::vector<int> cur(n + 2, 0);
  cur[n + 1] = mu + 1;
  // Remaining lower bounds let us stop early when the tail cannot be filled.
  std::vector<int> tail_min(n + 2, 0);
  for (int i = n; i >= 0; --i) tail_min[i] = tail_min[i + 1] + (subset.contains(i) ? 1 : 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      if (left >= (subset.contains(n) ? 1 : 0)) {
        cur[n] = left;
        out.push_back({cur});
      }
      return;
    }
    const int lo = subset.contains(i) ? 1 : 0;
    for (int e = lo; e <= left - tail_min[i + 1]; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  rec(rec, 0, total);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string vec_to_string(std::span<const int> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

std::vector<NuVector> solve_nu(std::span<const int> target, const MonomialSupport& support,
                               std::optional<int> asserted_cap) {
  const std::size_t nterms = support.size();
  const std::size_t dim = target.size();
  std::vector<NuVector> out;
  if (nterms == 0) return out;
  for (const auto& a : support.vectors)
    if (a.size() != dim) throw InputError("target and support dimensions differ");
  for (int t : target)
    if (t < 0) return out;

  // suffix_max[j][i] = max_{k >= j} a_k[i]
  std::vector<std::vector<int>> suffix_max(nterms + 1, std::vector<int>(dim, 0));
  for (std::size_t j = nterms; j-- > 0;)
    for (std::size_t i = 0; i < dim; ++i) suffix_max[j][i] = std::max(suffix_max[j + 1][i], support.vectors[j][i]);

  std::vector<int> residual(target.begin(), target.end());
  NuVector nu(nterms, 0);
  const std::size_t last = dim - 1;  // every a_j^+ has a 1 here

  auto feasible_tail = [&](std::size_t from) {
    for (std::size_t i = 0; i < dim; ++i)
      if (residual[i] > residual[last] * suffix_max[from][i]) return false;
    return true;
  };

  auto rec = [&](auto&& self, std::size_t j) -> void {
    const auto& a = support.vectors[j];
    int ub = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < dim; ++i)
      if (a[i] > 0) ub = std::min(ub, residual[i] / a[i]);
    if (ub == std::numeric_limits<int>::max()) ub = 0;
    if (j + 1 == nterms) {
      // The last variable is forced.
      const int v = residual[last];
      if (v > ub) return;
      for (std::size_t i = 0; i < dim; ++i)
        if (residual[i] != v * a[i]) return;
      nu[j] = v;
      out.push_back(nu);
      return;
    }
    for (int v = ub; v >= 0; --v) {
      for (std::size_t i = 0; i < dim; ++i) residual[i] -= v * a[i];
      if (feasible_tail(j + 1)) {
        nu[j] = v;
        self(self, j + 1);
      }
      for (std::size_t i = 0; i < dim; ++i) residual[i] += v * a[i];
    }
    nu[j] = 0;
  };
  rec(rec, 0);

  if (asserted_cap) {
    for (const auto& sol : out)
      for (int v : sol)
        if (v > *asserted_cap)
          throw InternalError("NU-BOUND", "nu = " + vec_to_string(sol) + " for target " +
                                                         vec_to_string(target) + " exceeds " +
                                                         std::to_string(*asserted_cap));
  }
  return out;
}

std::vector<RelationVector> relation_lattice_basis(const MonomialSupport& support) {
  const std::size_t ncols = support.size();
  if (ncols == 0) throw InputError("empty support");
  const std::size_t nrows = support.vectors[0].size();
  std::vector<std::vector<std::int64_t>> a(nrows, std::vector<std::int64_t>(ncols));
  for (std::size_t j = 0; j < ncols; ++j)
    for (std::size_t i = 0; i < nrows; ++i) a[i][j] = support.vectors[j][i];
  std::vector<std::vector<std::int64_t>> u(ncols, std::vector<std::int64_t>(ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) u[j][j] = 1;

  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };
  auto axpy_col = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (auto& row : a) row[dst] -= f * row[src];
    for (auto& row : u) row[dst] -= f * row[src];
  };

  std::size_t pivot = 0;
  for (std::size_t r = 0; r < nrows && pivot < ncols; ++r) {
    while (true) {
      std::size_t best = ncols;
      for (std::size_t k = pivot; k < ncols; ++k)
        if (a[r][k] != 0 && (best == ncols || std::llabs(a[r][k]) < std::llabs(a[r][best]))) best = k;
      if (best == ncols) break;
      swap_cols(pivot, best);
      bool cleared = true;
      for (std::size_t k = pivot + 1; k < ncols; ++k) {
        if (a[r][k] == 0) continue;
        axpy_col(k, pivot, a[r][k] / a[r][pivot]);
        if (a[r][k] != 0) cleared = false;
      }
      if (cleared) {
        ++pivot;
        break;
      }
    }
  }

  std::vector<RelationVector> basis;
  for (std::size_t k = pivot; k < ncols; ++k) {
    RelationVector l(ncols);
    for (std::size_t j = 0; j < ncols; ++j) l[j] = u[j][k];
    auto first = std::find_if(l.begin(), l.end(), [](std::int64_t x) { return x != 0; });
    if (first != l.end() && *first < 0)
      for (auto& x : l) x = -x;
    if (!is_relation(l, support)) throw InternalError("KERNEL", "column reduction produced a non-relation");
    basis.push_back(std::move(l));
  }
  return basis;
}

bool is_relation(std::span<const std::int64_t> l, const MonomialSupport& support) {
  if (l.size() != support.size()) return false;
  if (support.size() == 0) return true;
  const std::size_t dim = support.vectors[0].size();
  for (std::size_t i = 0; i < dim; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < l.size(); ++j) s += l[j] * support.vectors[j][i];
    if (s != 0) return false;
  }
  return true;
}

}  // namespace hwm
