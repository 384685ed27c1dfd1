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
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hwm {

using BigInt = boost::multiprecision::cpp_int;

/// Power series truncated after t^K with exact integer coefficients.
struct ExactSeries {
  std::vector<BigInt> coeffs;  // c_0..c_K

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  std::vector<std::string> to_strings() const;
  friend bool operator==(const ExactSeries&, const ExactSeries&) = default;
};

/// Power series truncated after t^K with coefficients in F_p.
struct SeriesModP {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> coeffs;

  std::size_t order() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const SeriesModP&, const SeriesModP&) = default;
};

ExactSeries mul_trunc(const ExactSeries& a, const ExactSeries& b, std::size_t order);
/// 1 / a for a series with constant term 1.
ExactSeries inverse(const ExactSeries& a, std::size_t order);

SeriesModP mul_trunc(const SeriesModP& a, const SeriesModP& b, std::size_t order);
/// 1 / a for a series with nonzero constant term.
SeriesModP inverse(const SeriesModP& a, std::size_t order);
/// A polynomial viewed as a series, padded or truncated to the given order.
SeriesModP series_from_poly(std::uint32_t p, const std::vector<std::uint32_t>& coeffs, std::size_t order);

}  // namespace hwm
