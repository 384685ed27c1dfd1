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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hwm/field.hpp"

namespace hwm {

/// Sparse (Laurent) polynomial over F_p in variables Lambda_1..Lambda_N.
///
/// Terms are keyed by exponent vector in lexicographic order and only nonzero
/// coefficients are stored. Negative exponents are allowed so the rescaled
/// matrices used in the invertibility checks can share this type.
class SparseModPoly {
 public:
  using Exponent = std::vector<std::int32_t>;
  using TermMap = std::map<Exponent, std::uint32_t>;

  SparseModPoly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}

  static SparseModPoly monomial(std::uint32_t p, Exponent exponent, std::uint32_t coeff);
  static SparseModPoly constant(std::uint32_t p, std::size_t nvars, std::uint32_t c);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  /// Adds c * Lambda^exponent.
  void add_term(const Exponent& exponent, std::uint32_t c);
  std::uint32_t coefficient(const Exponent& exponent) const;
  std::uint32_t constant_term() const { return coefficient(Exponent(nvars_, 0)); }
  /// Largest single exponent appearing in any term (0 for the zero polynomial).
  std::int32_t max_exponent() const;
  std::int32_t min_exponent() const;

  SparseModPoly& operator+=(const SparseModPoly& rhs);
  SparseModPoly& operator-=(const SparseModPoly& rhs);
  friend SparseModPoly operator+(SparseModPoly a, const SparseModPoly& b) { return a += b; }
  friend SparseModPoly operator-(SparseModPoly a, const SparseModPoly& b) { return a -= b; }
  friend SparseModPoly operator*(const SparseModPoly& a, const SparseModPoly& b);
  SparseModPoly operator-() const;
  SparseModPoly scaled(std::uint32_t c) const;
  /// Multiplies by the Laurent monomial Lambda^shift.
  SparseModPoly shifted(const Exponent& shift) const;

  /// (d/dLambda_j)^order; requires nonnegative exponents in variable j.
  SparseModPoly derivative(std::size_t j, std::uint32_t order = 1) const;

  /// Evaluates at a point of F_q^N; coefficients enter through the prime subfield.
  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const SparseModPoly& a, const SparseModPoly& b) {
    return a.p_ == b.p_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  std::uint32_t p_;
  std::size_t nvars_;
  TermMap terms_;
};

inline SparseModPoly zero_like(const SparseModPoly& x) { return SparseModPoly(x.prime(), x.nvars()); }
inline SparseModPoly one_like(const SparseModPoly& x) { return SparseModPoly::constant(x.prime(), x.nvars(), 1); }
inline bool is_zero(const SparseModPoly& x) { return x.empty(); }

}  // namespace hwm
