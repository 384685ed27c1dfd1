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
#include <vector>

#include "hwm/field.hpp"
#include "hwm/instance.hpp"
#include "hwm/series.hpp"

namespace hwm {

struct CountOptions {
  unsigned workers = 1;
  /// Cap on the extension field F_{q^k} used for counting.
  std::uint64_t field_guard = kDefaultFieldGuard;
  /// Cap on (number of fibres enumerated) * (number of terms).
  std::uint64_t work_guard = std::uint64_t{1} << 36;
};

/// N_k = #X(F_{q^k}) by fibration: in each affine chart x_r = 1 the points are
/// counted fibre by fibre over (x_0, ..., x_{r-2}), counting roots of the
/// univariate restriction in x_{r-1}, and the hyperplane x_r = 0 is handled
/// recursively. Results are exact and independent of the worker count.
std::uint64_t count_points(const HypersurfaceSpec& spec, unsigned k, const CountOptions& options = {});

/// Reference count: all nonzero vectors of F_{q^k}^{n+1}, zeros of f divided
/// by q^k - 1 (exactness asserted). Single-threaded.
std::uint64_t count_points_exhaustive(const HypersurfaceSpec& spec, unsigned k,
                                      std::uint64_t guard = std::uint64_t{1} << 24);

std::vector<std::uint64_t> point_counts(const HypersurfaceSpec& spec, std::size_t order,
                                        const CountOptions& options = {});

/// Z(t) = exp(sum_k N_k t^k / k) via m z_m = sum_{k=1}^m N_k z_{m-k}.
ExactSeries zeta_series(std::span<const std::uint64_t> counts);

/// P(t) = (Z(t) prod_{i<n} (1 - q^i t))^{(-1)^n}.
ExactSeries p_series(const ExactSeries& z, std::uint64_t q, int n);
inline ExactSeries p_series(const ExactSeries& z, const HypersurfaceSpec& spec) { return p_series(z, spec.q(), spec.n); }

/// P(q^{-mu} t) mod p. Each c_m must be divisible by q^{mu m}; otherwise
/// InternalError "AX-VIOLATION" is raised.
SeriesModP scale_and_reduce(const ExactSeries& series, std::uint32_t p, std::uint32_t a, int mu);
inline SeriesModP scale_and_reduce(const ExactSeries& series, const HypersurfaceSpec& spec) {
  return scale_and_reduce(series, spec.p, spec.a, spec.mu());
}

/// |U^S_min| + 3.
std::size_t default_series_order(const HypersurfaceSpec& spec);

}  // namespace hwm
