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

#include "hwm/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "hwm/errors.hpp"
#include "hwm/modp.hpp"

namespace hwm {
namespace {

using PolyP = std::vector<std::uint32_t>;  // coefficients low to high

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_sub(PolyP a, const PolyP& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp::sub(a[i], b[i], p);
  trim(a);
  return a;
}

PolyP poly_rem(PolyP a, const PolyP& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = modp::inv(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint32_t c = modp::mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = modp::sub(a[shift + i], modp::mul(c, b[i], p), p);
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = modp::add(r[i + j], modp::mul(a[i], b[j], p), p);
  }
  return poly_rem(std::move(r), f, p);
}

PolyP poly_powmod(PolyP base, std::uint64_t e, const PolyP& f, std::uint32_t p) {
  PolyP r = poly_rem(PolyP{1}, f, p);
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, f, p);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, f, p);
  }
  return r;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PolyP r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree m is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= m/2.
bool is_irreducible(const PolyP& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  const PolyP x{0, 1};
  PolyP h = poly_rem(x, f, p);
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    PolyP g = poly_gcd(f, poly_sub(h, x, p), p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

PolyP code_to_poly(std::uint64_t code, std::uint32_t p, std::uint32_t m) {
  PolyP r(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    r[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  trim(r);
  return r;
}

std::uint32_t poly_to_code(const PolyP& f, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return static_cast<std::uint32_t>(code);
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> fields;
  std::map<std::pair<const FieldCtx*, const FieldCtx*>, std::shared_ptr<const Embedding>> embeddings;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    PolyP f(m + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InternalError("NO-IRREDUCIBLE", "p=" + std::to_string(p) + " m=" + std::to_string(m));
}

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  size_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) size_ *= p;
  order_ = static_cast<std::uint32_t>(size_ - 1);

  const auto factors = prime_factors(order_);
  auto is_primitive = [&](const PolyP& g) {
    if (g.empty()) return false;
    for (std::uint64_t r : factors)
      if (poly_powmod(g, order_ / r, modulus_, p) == PolyP{1}) return false;
    return true;
  };

  // Prefer g = x (multiplying by x is a shift); otherwise the first primitive code.
  PolyP gen;
  const bool x_primitive = m > 1 && is_primitive(PolyP{0, 1});
  if (x_primitive) {
    gen = {0, 1};
  } else {
    for (std::uint64_t code = 1; code < size_; ++code) {
      PolyP g = code_to_poly(code, p, m);
      if (order_ == 1 || is_primitive(g)) {
        gen = std::move(g);
        break;
      }
    }
  }

  exp_.resize(order_);
  log_.assign(size_, kNoLog);
  std::vector<std::uint32_t> cur(m, 0);
  cur[0] = 1;
  const PolyP gen_full = gen;
  for (std::uint32_t i = 0; i < order_; ++i) {
    std::uint64_t code = 0;
    for (std::uint32_t k = m; k-- > 0;) code = code * p + cur[k];
    exp_[i] = static_cast<std::uint32_t>(code);
    log_[code] = i;
    if (x_primitive) {
      // cur <- cur * x mod modulus
      const std::uint32_t top = cur[m - 1];
      for (std::uint32_t k = m - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      if (top)
        for (std::uint32_t k = 0; k < m; ++k) cur[k] = modp::sub(cur[k], modp::mul(top, modulus_[k], p), p);
    } else {
      PolyP c(cur.begin(), cur.end());
      trim(c);
      PolyP next = poly_mulmod(c, gen_full, modulus_, p);
      std::fill(cur.begin(), cur.end(), 0);
      std::copy(next.begin(), next.end(), cur.begin());
    }
  }
  if (log_[1] != 0) throw InternalError("FIELD-TABLE", "exp table does not start at 1");

  zech_.resize(order_);
  for (std::uint32_t i = 0; i < order_; ++i) {
    const std::uint32_t c = exp_[i];
    const std::uint32_t c0 = c % p;
    const std::uint32_t plus_one = c - c0 + (c0 + 1 == p ? 0 : c0 + 1);
    zech_[i] = plus_one == 0 ? kNoLog : log_[plus_one];
  }
  half_order_log_ = p == 2 ? 0 : order_ / 2;
}

std::string FieldCtx::modulus_string() const {
  std::string out;
  for (std::size_t i = modulus_.size(); i-- > 0;) {
    const std::uint32_t c = modulus_[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

FieldElement FieldCtx::generator() const { return m_ == 1 ? zero() : FieldElement{this, p_}; }

FieldElement FieldCtx::element(std::uint32_t code) const {
  if (code >= size_) throw InputError("field element code out of range");
  return {this, code};
}

FieldElement FieldCtx::from_int(std::int64_t value) const { return {this, modp::reduce(value, p_)}; }

FieldElement FieldCtx::from_coeffs(std::span<const std::int64_t> coeffs) const {
  PolyP f(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = modp::reduce(coeffs[i], p_);
  return {this, poly_to_code(poly_rem(std::move(f), modulus_, p_), p_)};
}

std::uint32_t FieldCtx::add(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return modp::add(a, b, p_);
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint32_t la = log_[a];
  const std::uint32_t lb = log_[b];
  const std::uint32_t d = lb >= la ? lb - la : lb + order_ - la;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  const std::uint64_t s = std::uint64_t{la} + z;
  return exp_[s >= order_ ? s - order_ : s];
}

std::uint32_t FieldCtx::neg(std::uint32_t a) const {
  if (a == 0 || p_ == 2) return a;
  if (m_ == 1) return p_ - a;
  const std::uint64_t s = std::uint64_t{log_[a]} + half_order_log_;
  return exp_[s >= order_ ? s - order_ : s];
}

std::uint32_t FieldCtx::inv(std::uint32_t a) const {
  if (a == 0) throw InputError("inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : order_ - l];
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  const std::uint32_t p = ctx_->characteristic();
  std::vector<std::uint32_t> out(ctx_->degree(), 0);
  std::uint32_t c = code_;
  for (auto& digit : out) {
    digit = c % p;
    c /= p;
  }
  return out;
}

namespace {
const FieldCtx* common_ctx(const FieldElement& a, const FieldElement& b) {
  if (a.ctx() != b.ctx() || a.ctx() == nullptr) throw InputError("field elements from different contexts");
  return a.ctx();
}
}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  code_ = common_ctx(*this, rhs)->add(code_, rhs.code_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  code_ = common_ctx(*this, rhs)->sub(code_, rhs.code_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  code_ = common_ctx(*this, rhs)->mul(code_, rhs.code_);
  return *this;
}

FieldElement FieldElement::operator-() const { return {ctx_, ctx_->neg(code_)}; }

FieldPtr make_field(std::uint32_t p, std::uint32_t m, std::uint64_t guard) {
  if (!is_prime(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw InputError("extension degree must be at least 1");
  std::uint64_t size = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    size *= p;
    if (size > guard || size > (std::uint64_t{1} << 31))
      throw InputError("field F_" + std::to_string(p) + "^" + std::to_string(m) + " exceeds the size guard");
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  auto it = reg.fields.find({p, m});
  if (it != reg.fields.end()) return it->second;
  FieldPtr ctx(new FieldCtx(p, m, smallest_irreducible(p, m)));
  reg.fields.emplace(std::make_pair(p, m), ctx);
  return ctx;
}

FieldPtr context_of(const FieldElement& x) {
  if (!x.ctx()) throw InputError("element without field context");
  auto& reg = registry();
  std::lock_guard lock(reg.mu);
  return reg.fields.at({x.ctx()->characteristic(), x.ctx()->degree()});
}

FieldElement pow(FieldElement x, std::uint64_t e) {
  FieldElement r = x.ctx()->one();
  while (e) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

FieldElement inverse(FieldElement x) { return {x.ctx(), x.ctx()->inv(x.code())}; }

FieldElement frobenius(FieldElement x) { return pow(x, x.ctx()->characteristic()); }

std::vector<FieldElement> all_elements(const FieldCtx& ctx) {
  std::vector<FieldElement> out;
  out.reserve(ctx.size());
  for (std::uint64_t c = 0; c < ctx.size(); ++c) out.emplace_back(&ctx, static_cast<std::uint32_t>(c));
  return out;
}

Embedding::Embedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
  const std::uint32_t m1 = source_->degree();
  const std::uint32_t m2 = target_->degree();
  if (source_->characteristic() != target_->characteristic() || m2 % m1 != 0)
    throw InputError("no embedding F_" + std::to_string(source_->characteristic()) + "^" + std::to_string(m1) +
                     " -> F_" + std::to_string(target_->characteristic()) + "^" + std::to_string(m2));
  const auto& mod = source_->modulus();
  auto eval_modulus = [&](std::uint32_t r) {
    std::uint32_t acc = 0;
    for (std::size_t i = mod.size(); i-- > 0;) acc = target_->add(target_->mul(acc, r), mod[i]);
    return acc;
  };
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint64_t c = 0; c < target_->size(); ++c) {
    if (eval_modulus(static_cast<std::uint32_t>(c)) == 0) {
      root = static_cast<std::uint32_t>(c);
      found = true;
      break;
    }
  }
  if (!found) throw InternalError("EMBEDDING", "source modulus has no root in target");

  // Prime-field digits are the codes 0..p-1 in every context.
  image_.resize(source_->size());
  for (std::uint64_t c = 0; c < source_->size(); ++c) {
    std::uint32_t acc = 0;
    std::uint64_t rest = c;
    std::vector<std::uint32_t> digits(m1);
    for (auto& d : digits) {
      d = static_cast<std::uint32_t>(rest % source_->characteristic());
      rest /= source_->characteristic();
    }
    for (std::size_t i = m1; i-- > 0;) acc = target_->add(target_->mul(acc, root), digits[i]);
    image_[c] = acc;
  }
}

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (x.ctx() != source_.get()) throw InputError("element is not in the embedding source");
  return {target_.get(), image_[x.code()]};
}

std::shared_ptr<const Embedding> embedding(const FieldPtr& source, const FieldPtr& target) {
  auto& reg = registry();
  {
    std::lock_guard lock(reg.mu);
    auto it = reg.embeddings.find({source.get(), target.get()});
    if (it != reg.embeddings.end()) return it->second;
  }
  auto emb = std::make_shared<const Embedding>(source, target);
  std::lock_guard lock(reg.mu);
  return reg.embeddings.emplace(std::make_pair(source.get(), target.get()), emb).first->second;
}

FieldElement embed(const FieldElement& x, const FieldPtr& target) {
  if (x.ctx() == target.get()) return x;
  return (*embedding(context_of(x), target))(x);
}

}  // namespace hwm
