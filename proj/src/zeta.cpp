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

#include "hwm/zeta.hpp"

#include <bit>

#include "hwm/errors.hpp"
#include "hwm/lattice.hpp"
#include "hwm/parallel.hpp"

namespace hwm {
namespace {

constexpr std::uint32_t kZero = FieldCtx::kNoLog;

std::uint64_t checked_pow(std::uint64_t base, unsigned e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > cap / base) throw InputError("enumeration exceeds the work guard");
    r *= base;
  }
  return r;
}

/// Arithmetic on discrete logs; kZero stands for the zero element.
struct LogArith {
  const FieldCtx* f;
  std::uint32_t n;

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == kZero || b == kZero) return kZero;
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<std::uint32_t>(s >= n ? s - n : s);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (a == kZero) return b;
    if (b == kZero) return a;
    const std::uint32_t diff = b >= a ? b - a : b + n - a;
    const std::uint32_t z = f->zech(diff);
    if (z == kZero) return kZero;
    const std::uint64_t s = std::uint64_t{a} + z;
    return static_cast<std::uint32_t>(s >= n ? s - n : s);
  }
};

// Univariate arithmetic on element codes, used for fibres of degree >= 3.
using CodePoly = std::vector<std::uint32_t>;

void trim(CodePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

CodePoly rem(CodePoly a, const CodePoly& b, const FieldCtx& F) {
  trim(a);
  const std::uint32_t lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const std::uint32_t c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

CodePoly mulmod(const CodePoly& a, const CodePoly& b, const CodePoly& g, const FieldCtx& F) {
  if (a.empty() || b.empty()) return {};
  CodePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  return rem(std::move(r), g, F);
}

/// Number of distinct roots in F of g (deg g >= 1): deg gcd(g, y^Q - y).
std::uint64_t distinct_roots(CodePoly g, const FieldCtx& F) {
  trim(g);
  CodePoly h = rem(CodePoly{1}, g, F);
  CodePoly base = rem(CodePoly{0, 1}, g, F);
  for (std::uint64_t e = F.size(); e; e >>= 1) {
    if (e & 1) h = mulmod(h, base, g, F);
    if (e > 1) base = mulmod(base, base, g, F);
  }
  if (h.size() < 2) h.resize(2, 0);
  h[1] = F.sub(h[1], 1);
  trim(h);
  CodePoly a = g;
  CodePoly b = h;
  while (!b.empty()) {
    CodePoly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() - 1;
}

class FibreSolver {
 public:
  FibreSolver(const FieldCtx& F) : F_(F), arith_{&F, F.order()} {
    if (F.characteristic() == 2) {
      // Tr is F_2-linear in the code bits: bit i of the mask is Tr(g^i).
      for (std::uint32_t i = 0; i < F.degree(); ++i) {
        FieldElement basis = F.element(std::uint32_t{1} << i);
        FieldElement acc = basis;
        FieldElement power = basis;
        for (std::uint32_t k = 1; k < F.degree(); ++k) {
          power = power * power;
          acc += power;
        }
        if (acc.code() == 1) trace_mask_ |= std::uint32_t{1} << i;
      }
    } else {
      log_minus_four_ = arith_.mul(F.log_of(4 % F.characteristic()), F.log_of(F.neg(1)));
    }
  }

  const LogArith& arith() const { return arith_; }

  /// Roots in F of sum_e c_e y^e, coefficients given as logs.
  std::uint64_t roots(std::span<const std::uint32_t> c) const {
    std::size_t deg = c.size();
    while (deg > 0 && c[deg - 1] == kZero) --deg;
    if (deg == 0) return F_.size();  // identically zero
    --deg;
    if (deg == 0) return 0;
    if (deg == 1) return 1;
    if (deg == 2) {
      if (F_.characteristic() == 2) {
        if (c[1] == kZero) return 1;  // y^2 = const has one root
        // y = (c1/c2) z turns it into z^2 + z + c0 c2 / c1^2.
        const std::uint32_t n = arith_.n;
        const std::uint32_t inv_c1_sq = (2 * (n - c[1])) % n;
        const std::uint32_t z = arith_.mul(arith_.mul(c[0], c[2]), inv_c1_sq);
        if (z == kZero) return 2;
        return (std::popcount(F_.exp_of(z) & trace_mask_) & 1) ? 0 : 2;
      }
      const std::uint32_t disc =
          arith_.add(arith_.mul(c[1], c[1]), arith_.mul(log_minus_four_, arith_.mul(c[2], c[0])));
      if (disc == kZero) return 1;
      return disc % 2 == 0 ? 2 : 0;
    }
    CodePoly g(deg + 1);
    for (std::size_t e = 0; e <= deg; ++e) g[e] = c[e] == kZero ? 0 : F_.exp_of(c[e]);
    return distinct_roots(std::move(g), F_);
  }

 private:
  const FieldCtx& F_;
  LogArith arith_;
  std::uint32_t trace_mask_ = 0;
  std::uint32_t log_minus_four_ = 0;
};

struct ChartTerm {
  std::uint32_t log_coeff;
  std::vector<int> free_exps;            // exponents of x_0..x_{r-2}
  std::vector<std::uint32_t> steps;      // the same, reduced mod the group order
  int y_exp;                             // exponent of x_{r-1}
};

/// Points of the affine chart x_r = 1 of P^r.
class ChartCounter {
 public:
  ChartCounter(const FibreSolver& solver, std::vector<ChartTerm> terms, int nfree, int d)
      : solver_(solver), terms_(std::move(terms)), nfree_(nfree), d_(d) {}

  std::uint64_t count(unsigned workers) const {
    const LogArith& ar = solver_.arith();
    if (nfree_ == 0) {
      std::vector<std::uint32_t> c(d_ + 1, kZero);
      for (const auto& t : terms_) c[t.y_exp] = ar.add(c[t.y_exp], t.log_coeff);
      return solver_.roots(c);
    }
    const std::uint64_t q = ar.f->size();
    const std::size_t nblocks = std::min<std::uint64_t>(q, 64);
    std::vector<std::uint64_t> partial(nblocks, 0);
    parallel_for(nblocks, workers, [&](std::size_t b) {
      const std::uint64_t begin = q * b / nblocks;
      const std::uint64_t end = q * (b + 1) / nblocks;
      Scratch s(terms_.size(), nfree_, d_);
      std::uint64_t acc = 0;
      for (std::uint64_t v = begin; v < end; ++v) {
        auto& out = s.levels[1];
        for (std::size_t t = 0; t < terms_.size(); ++t) {
          const auto& term = terms_[t];
          if (v == 0) {
            out[t] = term.free_exps[0] == 0 ? term.log_coeff : kZero;
          } else if (term.log_coeff == kZero) {
            out[t] = kZero;
          } else {
            const std::uint64_t l = term.log_coeff + std::uint64_t{term.steps[0]} * (v - 1);
            out[t] = static_cast<std::uint32_t>(l % ar.n);
          }
        }
        acc += nfree_ == 1 ? solve(s.levels[1], s) : descend(1, s);
      }
      partial[b] = acc;
    });
    std::uint64_t total = 0;
    for (auto x : partial) total += x;
    return total;
  }

 private:
  struct Scratch {
    Scratch(std::size_t nterms, int nfree, int d)
        : levels(nfree + 1, std::vector<std::uint32_t>(nterms, kZero)), coeffs(d + 1, kZero) {}
    std::vector<std::vector<std::uint32_t>> levels;
    std::vector<std::uint32_t> coeffs;
  };

  std::uint64_t solve(const std::vector<std::uint32_t>& logs, Scratch& s) const {
    const LogArith& ar = solver_.arith();
    std::fill(s.coeffs.begin(), s.coeffs.end(), kZero);
    for (std::size_t t = 0; t < terms_.size(); ++t)
      if (logs[t] != kZero) s.coeffs[terms_[t].y_exp] = ar.add(s.coeffs[terms_[t].y_exp], logs[t]);
    return solver_.roots(s.coeffs);
  }

  // Assigns coordinate `level` (levels[level] holds the partial products).
  std::uint64_t descend(int level, Scratch& s) const {
    const LogArith& ar = solver_.arith();
    const auto& in = s.levels[level];
    auto& out = s.levels[level + 1];
    const bool last = level + 1 == nfree_;
    std::uint64_t acc = 0;
    // Coordinate zero.
    for (std::size_t t = 0; t < terms_.size(); ++t) out[t] = terms_[t].free_exps[level] == 0 ? in[t] : kZero;
    acc += last ? solve(out, s) : descend(level + 1, s);
    // Coordinate w^k for k = 0..n-1, stepping the logs incrementally.
    for (std::uint32_t k = 0; k < ar.n; ++k) {
      for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (in[t] == kZero) {
          out[t] = kZero;
          continue;
        }
        if (k == 0) {
          out[t] = in[t];
        } else {
          std::uint32_t x = out[t] + terms_[t].steps[level];
          out[t] = x >= ar.n ? x - ar.n : x;
        }
      }
      acc += last ? solve(out, s) : descend(level + 1, s);
    }
    return acc;
  }

  const FibreSolver& solver_;
  std::vector<ChartTerm> terms_;
  int nfree_;
  int d_;
};

}  // namespace

std::uint64_t count_points(const HypersurfaceSpec& spec, unsigned k, const CountOptions& options) {
  if (k < 1) throw InputError("extension index k must be at least 1");
  const FieldPtr big = make_field(spec.p, spec.a * k, options.field_guard);
  const FieldCtx& F = *big;
  const std::uint32_t order = F.order();
  const std::uint64_t q = F.size();
  FibreSolver solver(F);

  std::vector<std::uint32_t> logs;
  for (const auto& t : spec.terms) logs.push_back(F.log_of(embed(t.coeff, big).code()));

  std::uint64_t total = 0;
  for (int r = spec.n; r >= 0; --r) {
    std::vector<ChartTerm> active;
    for (std::size_t j = 0; j < spec.terms.size(); ++j) {
      const auto& e = spec.terms[j].exponents;
      bool inside = logs[j] != kZero;
      for (int i = r + 1; i <= spec.n && inside; ++i) inside = e[i] == 0;
      if (!inside) continue;
      ChartTerm term{logs[j], {}, {}, r >= 1 ? e[r - 1] : 0};
      for (int i = 0; i + 1 < r; ++i) {
        term.free_exps.push_back(e[i]);
        term.steps.push_back(static_cast<std::uint32_t>(e[i] % order));
      }
      active.push_back(std::move(term));
    }
    if (active.empty()) {
      // f vanishes on all of P^r.
      total += (checked_pow(q, r + 1, ~std::uint64_t{0}) - 1) / (q - 1);
      break;
    }
    if (r == 0) break;  // the single point [1] has f = lambda != 0
    const std::uint64_t fibres = checked_pow(q, r - 1, options.work_guard);
    if (fibres > options.work_guard / active.size()) throw InputError("enumeration exceeds the work guard");
    total += ChartCounter(solver, std::move(active), r - 1, spec.d).count(options.workers);
  }
  return total;
}

std::uint64_t count_points_exhaustive(const HypersurfaceSpec& spec, unsigned k, std::uint64_t guard) {
  const FieldPtr big = make_field(spec.p, spec.a * k, guard);
  const FieldCtx& F = *big;
  const std::uint64_t q = F.size();
  const std::uint64_t total = checked_pow(q, spec.n + 1, guard);
  std::vector<FieldElement> coeffs;
  for (const auto& t : spec.terms) coeffs.push_back(embed(t.coeff, big));
  std::vector<FieldElement> x(spec.n + 1, F.zero());
  std::uint64_t zeros = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (auto& xi : x) {
      xi = F.element(static_cast<std::uint32_t>(rest % q));
      rest /= q;
    }
    FieldElement f = F.zero();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      FieldElement mono = coeffs[j];
      for (int i = 0; i <= spec.n; ++i) mono *= pow(x[i], spec.terms[j].exponents[i]);
      f += mono;
    }
    if (f.is_zero()) ++zeros;
  }
  const std::uint64_t affine = zeros - 1;  // drop the zero vector
  if (affine % (q - 1) != 0)
    throw InternalError("ORBIT-COUNT", "affine zero count " + std::to_string(affine) + " not divisible by q^k - 1");
  return affine / (q - 1);
}

std::vector<std::uint64_t> point_counts(const HypersurfaceSpec& spec, std::size_t order, const CountOptions& options) {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= order; ++k) out.push_back(count_points(spec, static_cast<unsigned>(k), options));
  return out;
}

ExactSeries zeta_series(std::span<const std::uint64_t> counts) {
  const std::size_t order = counts.size();
  ExactSeries z{std::vector<BigInt>(order + 1, 0)};
  z.coeffs[0] = 1;
  for (std::size_t m = 1; m <= order; ++m) {
    BigInt s = 0;
    for (std::size_t k = 1; k <= m; ++k) s += BigInt(counts[k - 1]) * z.coeffs[m - k];
    if (s % m != 0) throw InternalError("ZETA-RECURRENCE", "m z_m not divisible by m at m = " + std::to_string(m));
    z.coeffs[m] = s / m;
  }
  return z;
}

ExactSeries p_series(const ExactSeries& z, std::uint64_t q, int n) {
  const std::size_t order = z.order();
  ExactSeries w = z;
  BigInt qi = 1;
  for (int i = 0; i < n; ++i) {
    w = mul_trunc(w, ExactSeries{{BigInt(1), BigInt(-qi)}}, order);
    qi *= q;
  }
  return n % 2 == 0 ? w : inverse(w, order);
}

SeriesModP scale_and_reduce(const ExactSeries& series, std::uint32_t p, std::uint32_t a, int mu) {
  SeriesModP out{p, {}};
  BigInt q = 1;
  for (std::uint32_t i = 0; i < a; ++i) q *= p;
  BigInt scale = 1;
  for (std::size_t m = 0; m < series.coeffs.size(); ++m) {
    const BigInt& c = series.coeffs[m];
    if (c % scale != 0)
      throw InternalError("AX-VIOLATION", "coefficient " + std::to_string(m) + " = " + c.str() +
                                              " is not divisible by q^(mu*m) = " + scale.str());
    BigInt r = (c / scale) % p;
    if (r < 0) r += p;
    out.coeffs.push_back(static_cast<std::uint32_t>(r));
    for (int i = 0; i < mu; ++i) scale *= q;
  }
  return out;
}

std::size_t default_series_order(const HypersurfaceSpec& spec) {
  return enumerate_u_min(IndexSubset::full(spec.n), spec.n, spec.d).size() + 3;
}

}  // namespace hwm
