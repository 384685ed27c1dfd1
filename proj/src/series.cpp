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

#include "hwm/series.hpp"

#include "hwm/errors.hpp"
#include "hwm/modp.hpp"

namespace hwm {

std::vector<std::string> ExactSeries::to_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs) out.push_back(c.str());
  return out;
}

ExactSeries mul_trunc(const ExactSeries& a, const ExactSeries& b, std::size_t order) {
  ExactSeries r{std::vector<BigInt>(order + 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size() && i <= order; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size() && i + j <= order; ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  return r;
}

ExactSeries inverse(const ExactSeries& a, std::size_t order) {
  if (a.coeffs.empty() || a.coeffs[0] != 1) throw InputError("series inverse needs constant term 1");
  ExactSeries r{std::vector<BigInt>(order + 1, 0)};
  r.coeffs[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    BigInt s = 0;
    for (std::size_t k = 1; k <= m && k < a.coeffs.size(); ++k) s += a.coeffs[k] * r.coeffs[m - k];
    r.coeffs[m] = -s;
  }
  return r;
}

SeriesModP mul_trunc(const SeriesModP& a, const SeriesModP& b, std::size_t order) {
  SeriesModP r{a.p, std::vector<std::uint32_t>(order + 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size() && i <= order; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size() && i + j <= order; ++j)
      r.coeffs[i + j] = modp::add(r.coeffs[i + j], modp::mul(a.coeffs[i], b.coeffs[j], a.p), a.p);
  }
  return r;
}

SeriesModP inverse(const SeriesModP& a, std::size_t order) {
  if (a.coeffs.empty() || a.coeffs[0] == 0) throw InputError("series inverse needs a unit constant term");
  const std::uint32_t p = a.p;
  const std::uint32_t c0inv = modp::inv(a.coeffs[0], p);
  SeriesModP r{p, std::vector<std::uint32_t>(order + 1, 0)};
  r.coeffs[0] = c0inv;
  for (std::size_t m = 1; m <= order; ++m) {
    std::uint32_t s = 0;
    for (std::size_t k = 1; k <= m && k < a.coeffs.size(); ++k)
      s = modp::add(s, modp::mul(a.coeffs[k], r.coeffs[m - k], p), p);
    r.coeffs[m] = modp::mul(modp::neg(s, p), c0inv, p);
  }
  return r;
}

SeriesModP series_from_poly(std::uint32_t p, const std::vector<std::uint32_t>& coeffs, std::size_t order) {
  SeriesModP r{p, std::vector<std::uint32_t>(order + 1, 0)};
  for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) r.coeffs[k] = coeffs[k] % p;
  return r;
}

}  // namespace hwm
