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

#include "hwm/sparse_poly.hpp"

#include <algorithm>

#include "hwm/errors.hpp"
#include "hwm/modp.hpp"

namespace hwm {

SparseModPoly SparseModPoly::monomial(std::uint32_t p, Exponent exponent, std::uint32_t coeff) {
  SparseModPoly r(p, exponent.size());
  r.add_term(exponent, coeff);
  return r;
}

SparseModPoly SparseModPoly::constant(std::uint32_t p, std::size_t nvars, std::uint32_t c) {
  return monomial(p, Exponent(nvars, 0), c);
}

void SparseModPoly::add_term(const Exponent& exponent, std::uint32_t c) {
  if (exponent.size() != nvars_) throw InputError("exponent length does not match variable count");
  c %= p_;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = modp::add(it->second, c, p_);
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint32_t SparseModPoly::coefficient(const Exponent& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

std::int32_t SparseModPoly::max_exponent() const {
  std::int32_t best = 0;
  for (const auto& [e, c] : terms_)
    for (auto x : e) best = std::max(best, x);
  return best;
}

std::int32_t SparseModPoly::min_exponent() const {
  std::int32_t best = 0;
  for (const auto& [e, c] : terms_)
    for (auto x : e) best = std::min(best, x);
  return best;
}

SparseModPoly& SparseModPoly::operator+=(const SparseModPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

SparseModPoly& SparseModPoly::operator-=(const SparseModPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, modp::neg(c, p_));
  return *this;
}

SparseModPoly operator*(const SparseModPoly& a, const SparseModPoly& b) {
  SparseModPoly r(a.p_, a.nvars_);
  SparseModPoly::Exponent e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, modp::mul(ca, cb, a.p_));
    }
  return r;
}

SparseModPoly SparseModPoly::operator-() const { return scaled(p_ - 1); }

SparseModPoly SparseModPoly::scaled(std::uint32_t c) const {
  SparseModPoly r(p_, nvars_);
  c %= p_;
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, modp::mul(v, c, p_));
  return r;
}

SparseModPoly SparseModPoly::shifted(const Exponent& shift) const {
  SparseModPoly r(p_, nvars_);
  for (const auto& [e, v] : terms_) {
    Exponent s = e;
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += shift[i];
    r.terms_.emplace(std::move(s), v);
  }
  return r;
}

SparseModPoly SparseModPoly::derivative(std::size_t j, std::uint32_t order) const {
  SparseModPoly r(p_, nvars_);
  for (const auto& [e, v] : terms_) {
    if (e[j] < 0) throw InputError("derivative of a negative power");
    if (static_cast<std::uint32_t>(e[j]) < order) continue;
    std::uint32_t falling = 1;
    for (std::uint32_t k = 0; k < order; ++k) falling = modp::mul(falling, (e[j] - k) % p_, p_);
    Exponent s = e;
    s[j] -= static_cast<std::int32_t>(order);
    r.add_term(s, modp::mul(v, falling, p_));
  }
  return r;
}

FieldElement SparseModPoly::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != nvars_) throw InputError("evaluation point has the wrong length");
  if (nvars_ == 0) throw InputError("cannot evaluate a polynomial in zero variables");
  const FieldCtx& ctx = *point[0].ctx();
  if (ctx.characteristic() != p_) throw InputError("evaluation field has the wrong characteristic");
  FieldElement acc = ctx.zero();
  for (const auto& [e, v] : terms_) {
    FieldElement term = ctx.from_int(v);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] >= 0) {
        term *= pow(point[i], static_cast<std::uint64_t>(e[i]));
      } else {
        term *= pow(inverse(point[i]), static_cast<std::uint64_t>(-e[i]));
      }
    }
    acc += term;
  }
  return acc;
}

std::string SparseModPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest exponent vectors first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, v] = *it;
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "L" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(v);
    } else {
      out += (v == 1 ? "" : std::to_string(v) + "*") + mono;
    }
  }
  return out;
}

}  // namespace hwm
