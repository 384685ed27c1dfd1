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

#include "hwm/verify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "hwm/errors.hpp"

namespace hwm {
namespace {

HypersurfaceSpec with_ones(std::uint32_t p, std::uint32_t a, int n, int d, std::vector<std::vector<int>> monomials) {
  const auto F = make_field(p, a);
  std::vector<Term> terms;
  for (auto& m : monomials) terms.push_back({std::move(m), F->one()});
  return make_spec(p, a, n, d, terms);
}

HypersurfaceSpec fermat_cubic(std::uint32_t p) { return with_ones(p, 1, 2, 3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}); }

HypersurfaceSpec random_full(std::uint32_t p, std::uint32_t a, int n, int d, std::uint64_t seed) {
  const auto F = make_field(p, a);
  std::mt19937_64 rng(seed);
  std::vector<Term> terms;
  for (const auto& m : all_monomials(n, d)) terms.push_back({m, F->element(rng() % F->size())});
  terms[0].coeff = F->one();
  return make_spec(p, a, n, d, terms);
}

VerifyOptions order(std::size_t k) {
  VerifyOptions o;
  o.series_order = k;
  return o;
}

TEST(MainCongruence, SupersingularFermat) {
  const Report r = check_main_congruence(fermat_cubic(2), order(5));
  EXPECT_TRUE(r.pass) << to_json(r).dump();
  EXPECT_EQ(r.details["det"], "1");
  EXPECT_TRUE(r.witness.is_null());
}

TEST(MainCongruence, OrdinaryFermat) {
  const Report r = check_main_congruence(fermat_cubic(7), order(5));
  EXPECT_TRUE(r.pass) << to_json(r).dump();
  EXPECT_EQ(r.details["det"], "1 + t");
}

TEST(MainCongruence, RejectsWrongCaseAndDegenerate) {
  EXPECT_THROW(check_main_congruence(with_ones(3, 1, 2, 2, {{0, 1, 1}})), InputError);
  const auto F = make_field(3, 1);
  const HypersurfaceSpec zero = make_spec(3, 1, 2, 3, {{{3, 0, 0}, F->zero()}});
  EXPECT_THROW(check_main_congruence(zero), InputError);
}

TEST(DivisibleCase, CorrectionFactorIsNeeded) {
  // For x1*x2 = 0 the determinant alone is 1 while the counts give
  // 1/(1 - t) mod p, so the g-product division carries the whole answer.
  const HypersurfaceSpec lines = with_ones(3, 1, 2, 2, {{0, 1, 1}});
  const Report r = check_divisible_case(lines, order(4));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.details["det_coeffs"], Json(std::vector<std::uint32_t>{1}));
  EXPECT_EQ(r.details["scaled_mod_p"], Json(std::vector<std::uint32_t>(5, 1)));
}

TEST(DivisibleCase, TwoLines) {
  for (auto [p, a] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const Report r = check_divisible_case(with_ones(p, a, 2, 2, {{0, 1, 1}}), order(5));
    EXPECT_TRUE(r.pass) << to_json(r).dump();
  }
}

TEST(DivisibleCase, FourHyperplanes) {
  const Report r = check_divisible_case(with_ones(2, 1, 4, 4, {{0, 1, 1, 1, 1}}), order(5));
  EXPECT_TRUE(r.pass) << to_json(r).dump();
}

TEST(DivisibleCase, RandomFullConics) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Report r = check_divisible_case(random_full(2, 1, 2, 2, seed), order(5));
    EXPECT_TRUE(r.pass) << to_json(r).dump();
  }
}

TEST(HwOracle, FermatValues) {
  EXPECT_EQ(classical_hw_oracle(fermat_cubic(7))(0, 0), make_field(7, 1)->from_int(6));
  EXPECT_TRUE(classical_hw_oracle(fermat_cubic(2))(0, 0).is_zero());
  EXPECT_TRUE(check_hw_oracle(fermat_cubic(7)).pass);
}

TEST(HwOracle, EllipticCurveOverF3) {
  // y^2 z - x^3 - x z^2: no two terms multiply to (xyz)^2.
  const auto F = make_field(3, 1);
  const HypersurfaceSpec e =
      make_spec(3, 1, 2, 3, {{{0, 2, 1}, F->one()}, {{3, 0, 0}, -F->one()}, {{1, 0, 2}, -F->one()}});
  EXPECT_TRUE(classical_hw_oracle(e)(0, 0).is_zero());
  EXPECT_TRUE(check_hw_oracle(e).pass);
}

TEST(HwOracle, RandomInstancesAgree) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 30; ++it) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[rng() % 4];
    const auto [n, d] = std::vector<std::pair<int, int>>{{2, 3}, {1, 2}, {1, 3}, {2, 4}, {3, 4}}[rng() % 5];
    const Report r = check_hw_oracle(random_full(p, 1 + rng() % 2, n, d, rng()));
    ASSERT_TRUE(r.pass) << to_json(r).dump();
  }
  EXPECT_THROW(classical_hw_oracle(random_full(3, 1, 2, 2, 1)), InputError);
}

TEST(Euler, Examples) {
  const HypersurfaceSpec f = fermat_cubic(7);
  const LatticePoint u{{1, 1, 1, 1}};
  EXPECT_TRUE(check_euler(f, IndexSubset::full(2), u, u).pass);
  // A zero entry passes vacuously.
  const LatticePoint v{{2, 1, 0, 1}};
  const Report r = check_euler(f, IndexSubset::full(2), u, v);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.details["monomials"], 0);
}

TEST(Box, Examples) {
  const HypersurfaceSpec conic = with_ones(5, 1, 2, 2, {{2, 0, 0}, {0, 2, 0}, {1, 1, 0}});
  const auto pts = enumerate_u_min(IndexSubset::full(2), 2, 2);
  for (const auto& u : pts) {
    for (const auto& v : pts) {
      EXPECT_TRUE(check_box(conic, IndexSubset::full(2), u, v, {1, 1, -2}).pass);
      EXPECT_TRUE(check_box(conic, IndexSubset::full(2), u, v, {0, 0, 0}).pass);
    }
  }
  EXPECT_THROW(check_box(conic, IndexSubset::full(2), pts[0], pts[0], {1, 0, 0}), InputError);
  EXPECT_TRUE(check_box_all(fermat_cubic(5)).pass);
  EXPECT_EQ(check_box_all(fermat_cubic(5)).details["relations_tested"], 0);
}

TEST(Hypergeometric, AllSubsetsOnRandomInstances) {
  for (auto [p, n, d] : {std::tuple{2u, 2, 2}, {3u, 2, 2}, {5u, 2, 3}, {3u, 3, 2}, {2u, 3, 3}}) {
    const HypersurfaceSpec spec = random_full(p, 1, n, d, p * 10 + n);
    EXPECT_TRUE(check_euler_all(spec).pass);
    const Report box = check_box_all(spec);
    EXPECT_TRUE(box.pass) << to_json(box).dump();
    EXPECT_GT(box.details["applications"].get<int>(), 0);
  }
}

std::set<std::vector<int>> prefix_monomials(const Arrangement& a, std::size_t from, std::size_t to) {
  std::set<std::vector<int>> out;
  for (std::size_t j = from; j < to; ++j)
    out.insert(std::vector<int>(a.support.vectors[j].begin(), a.support.vectors[j].end() - 1));
  return out;
}

TEST(Arrangement, FullConic) {
  const Arrangement a = construct_arrangement(IndexSubset::full(2), 2, 2);
  EXPECT_EQ(a.mu, 1);
  EXPECT_EQ(a.u_min.size(), 3u);
  EXPECT_EQ(prefix_monomials(a, 0, 1), (std::set<std::vector<int>>{{1, 1, 0}}));
  EXPECT_EQ(prefix_monomials(a, 1, 4), (std::set<std::vector<int>>{{0, 0, 2}, {1, 0, 1}, {0, 1, 1}}));
  EXPECT_EQ(a.support.size(), 6u);
}

TEST(Arrangement, QuinticFourfold) {
  const Arrangement a = construct_arrangement(IndexSubset::full(4), 4, 5);
  EXPECT_EQ(a.mu, 0);
  ASSERT_EQ(a.u_min.size(), 1u);
  EXPECT_EQ(prefix_monomials(a, 0, 1), (std::set<std::vector<int>>{{1, 1, 1, 1, 1}}));
}

TEST(Arrangement, MissingMonomial) {
  MonomialSupport s = full_support(2, 2);
  s.vectors.erase(std::find(s.vectors.begin(), s.vectors.end(), AugmentedVector{0, 0, 2, 1}));
  EXPECT_THROW(construct_arrangement(IndexSubset::full(2), s), InputError);
}

TEST(Arrangement, RelabelsProperSubsets) {
  for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 3}}) {
    for (std::uint32_t mask = 1; mask < (1u << (n + 1)); ++mask) {
      const Arrangement a = construct_arrangement(IndexSubset(mask), n, d);
      ASSERT_EQ(a.k_of_u.size(), a.u_min.size());
      ASSERT_EQ(std::set<std::size_t>(a.k_of_u.begin(), a.k_of_u.end()).size(), a.u_min.size());
      ASSERT_EQ(a.permutation.size(), static_cast<std::size_t>(n + 1));
    }
  }
}

TEST(GenericInvertibility, SmallCases) {
  for (auto [n, d] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 5}}) {
    for (std::uint32_t p : {2u, 3u, 5u}) {
      const Report r = check_generic_invertibility(IndexSubset::full(n), n, d, p);
      EXPECT_TRUE(r.pass) << to_json(r).dump();
      EXPECT_EQ(r.details["distinguished_coefficient"], 1);
    }
  }
}

TEST(GenericInvertibility, ProperSubsets) {
  for (std::uint32_t mask : {0b011u, 0b101u, 0b110u, 0b001u}) {
    const Report r = check_generic_invertibility(IndexSubset(mask), 2, 2, 3);
    EXPECT_TRUE(r.pass) << to_json(r).dump();
  }
}

TEST(GenericInvertibility, NoTrialsMeansNoCertificate) {
  VerifyOptions o;
  o.trials = 0;
  const Report r = check_generic_invertibility(IndexSubset::full(2), 2, 2, 2, o);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.witness["message"], "identically zero under Schwartz-Zippel sample");
}

TEST(GenericInvertibility, DimensionGuardSkipsCoefficient) {
  VerifyOptions o;
  o.det_dim_guard = 2;
  const Report r = check_generic_invertibility(IndexSubset::full(2), 2, 2, 3, o);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_TRUE(r.details["distinguished_coefficient"].is_null());
}

TEST(ConstantTerm, Examples) {
  for (std::uint32_t p : {2u, 3u}) {
    const Report r = constant_term_separation(IndexSubset::full(2), 2, 2, p);
    EXPECT_TRUE(r.pass) << to_json(r).dump();
    EXPECT_EQ(r.details["det_constant_term"], 1);
  }
  EXPECT_TRUE(constant_term_separation(IndexSubset::full(4), 4, 5, 2).pass);
}

TEST(Reports, JsonIsDeterministic) {
  const HypersurfaceSpec spec = random_full(3, 2, 2, 2, 77);
  VerifyOptions one = order(4);
  VerifyOptions four = order(4);
  four.workers = 4;
  EXPECT_EQ(to_json(check_congruence(spec, one)).dump(), to_json(check_congruence(spec, four)).dump());
  EXPECT_FALSE(to_json(check_congruence(spec, one)).contains("seconds"));
  EXPECT_TRUE(to_json(check_congruence(spec, one), true).contains("seconds"));
}

}  // namespace
}  // namespace hwm
