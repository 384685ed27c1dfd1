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
#include <string_view>
#include <vector>

#include "hwm/field.hpp"

namespace hwm {

/// (a_0, ..., a_n, 1): an exponent vector with the homogenizing 1 appended.
using AugmentedVector = std::vector<int>;

/// Augmented support of a degree-d form in n+1 variables, in term order.
struct MonomialSupport {
  int n = 0;
  int d = 0;
  std::vector<AugmentedVector> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
};

AugmentedVector augment(std::span<const int> exponents);

struct Term {
  std::vector<int> exponents;  // length n + 1, summing to d
  FieldElement coeff;
};

/// f = sum_j coeff_j x^{exponents_j} over F_q, q = p^a, in P^n.
struct HypersurfaceSpec {
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  int n = 0;
  int d = 0;
  FieldPtr field;
  std::vector<Term> terms;

  std::size_t num_terms() const noexcept { return terms.size(); }
  std::uint64_t q() const;
  /// mu with ceil((n+1)/d) = mu + 1.
  int mu() const;
  MonomialSupport support() const;
  std::vector<FieldElement> coefficients() const;
  bool all_coefficients_zero() const;

  friend bool operator==(const HypersurfaceSpec& x, const HypersurfaceSpec& y);
};

/// Validating constructor shared by the parser and the instance generators.
HypersurfaceSpec make_spec(std::uint32_t p, std::uint32_t a, int n, int d, std::vector<Term> terms);

/// Parses the JSON instance format (see docs/instance-format.md). Zero
/// coefficients are allowed; a message is appended to `warnings` for each.
HypersurfaceSpec parse_spec(std::string_view text, std::vector<std::string>* warnings = nullptr);
HypersurfaceSpec load_spec(const std::string& path, std::vector<std::string>* warnings = nullptr);
std::string serialize_spec(const HypersurfaceSpec& spec);

/// Coefficient grammar: sums of terms `c`, `c*g^k`, `c g^k`, `g^k`, `g` with
/// optional signs, where g is the fixed generator of F_q.
FieldElement parse_coefficient(std::string_view text, const FieldCtx& field);
/// Canonical text form of an element as a polynomial in g (integer over F_p).
std::string format_element(const FieldElement& x);

/// All degree-d monomials in n+1 variables, x_0^d first (descending lex).
std::vector<std::vector<int>> all_monomials(int n, int d);

}  // namespace hwm
