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
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace hwm {

/// Default cap on p^m for any field context; table-driven arithmetic keeps
/// three word-sized tables of this length.
inline constexpr std::uint64_t kDefaultFieldGuard = std::uint64_t{1} << 20;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Element of F_{p^m}.
///
/// The polynomial representative sum_i c_i g^i (g the class of x modulo the
/// context's modulus) is packed as the integer code sum_i c_i p^i, so code
/// order is lexicographic order on (c_{m-1}, ..., c_0). Contexts returned by
/// make_field live for the whole process, so the raw pointer never dangles.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

  const FieldCtx* ctx() const noexcept { return ctx_; }
  std::uint32_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  /// Coefficients c_0..c_{m-1} of the polynomial representative.
  std::vector<std::uint32_t> coeffs() const;

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.ctx_ == b.ctx_ && a.code_ == b.code_;
  }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t code_ = 0;
};

/// Immutable description of F_{p^m} with log/antilog/Zech tables.
class FieldCtx {
 public:
  static constexpr std::uint32_t kNoLog = 0xFFFFFFFFu;

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return size_; }
  /// Multiplicative group order p^m - 1.
  std::uint32_t order() const noexcept { return order_; }

  /// Monic modulus, coefficients low to high (length m + 1).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, 1}; }
  /// The class of x modulo the modulus (only meaningful for m > 1).
  FieldElement generator() const;
  /// The primitive element that the log tables are based on.
  FieldElement primitive() const { return {this, exp_[1 % order_]}; }
  FieldElement element(std::uint32_t code) const;
  FieldElement from_int(std::int64_t value) const;
  /// Reduces an arbitrary-length coefficient list (low to high) modulo the modulus.
  FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;

  // Code-level arithmetic.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = std::uint64_t{log_[a]} + log_[b];
    return exp_[s >= order_ ? s - order_ : s];
  }
  std::uint32_t inv(std::uint32_t a) const;

  // Log-domain access: log of 0 is kNoLog; zech(d) = log(1 + w^d) or kNoLog.
  std::uint32_t log_of(std::uint32_t code) const { return code == 0 ? kNoLog : log_[code]; }
  std::uint32_t exp_of(std::uint32_t log) const { return exp_[log]; }
  std::uint32_t zech(std::uint32_t d) const { return zech_[d]; }

 private:
  friend FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::uint64_t guard);
  FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint64_t size_;
  std::uint32_t order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> zech_;
  std::uint32_t half_order_log_ = 0;  // log of -1
};

bool is_prime(std::uint64_t n);

/// F_{p^m} with the lexicographically smallest monic irreducible modulus.
/// Contexts are cached per (p, m); the guard bounds p^m.
FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::uint64_t guard = kDefaultFieldGuard);

/// Smallest monic irreducible of degree m over F_p in lexicographic order of
/// (c_{m-1}, ..., c_0); coefficients returned low to high.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

FieldElement pow(FieldElement x, std::uint64_t e);
FieldElement inverse(FieldElement x);
/// x^p.
FieldElement frobenius(FieldElement x);
std::vector<FieldElement> all_elements(const FieldCtx& ctx);

/// Fixed embedding F_{p^m1} -> F_{p^m2} sending the source generator to the
/// first root (in code order) of the source modulus in the target.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);
  const FieldPtr& source() const noexcept { return source_; }
  const FieldPtr& target() const noexcept { return target_; }
  FieldElement operator()(const FieldElement& x) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  std::vector<std::uint32_t> image_;
};

/// Cached embedding for the pair; throws InputError if m1 does not divide m2.
std::shared_ptr<const Embedding> embedding(const FieldPtr& source, const FieldPtr& target);
FieldElement embed(const FieldElement& x, const FieldPtr& target);

/// Shared pointer form of an element's context (contexts are cached, so this
/// is a lookup rather than an allocation).
FieldPtr context_of(const FieldElement& x);

}  // namespace hwm
