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

#include <gtest/gtest.h>

#include <random>

#include "hwm/dense.hpp"
#include "hwm/errors.hpp"
#include "hwm/series.hpp"
#include "hwm/sparse_poly.hpp"

namespace hwm {
namespace {

using Exp = SparseModPoly::Exponent;

SparseModPoly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t nvars, int terms, int max_exp) {
  SparseModPoly f(p, nvars);
  for (int t = 0; t < terms; ++t) {
    Exp e(nvars);
    for (auto& x : e) x = static_cast<std::int32_t>(rng() % (max_exp + 1));
    f.add_term(e, static_cast<std::uint32_t>(rng() % p));
  }
  return f;
}

TEST(SparseModPoly, ArithmeticAgreesWithEvaluation) {
  std::mt19937_64 rng(3);
  const auto F = make_field(5, 2);
  for (int it = 0; it < 200; ++it) {
    const SparseModPoly f = random_poly(rng, 5, 3, 5, 4);
    const SparseModPoly g = random_poly(rng, 5, 3, 5, 4);
    std::vector<FieldElement> x;
    for (int i = 0; i < 3; ++i) x.push_back(F->element(rng() % F->size()));
    ASSERT_EQ((f * g).evaluate(x), f.evaluate(x) * g.evaluate(x));
    ASSERT_EQ((f + g).evaluate(x), f.evaluate(x) + g.evaluate(x));
    ASSERT_EQ((f - g).evaluate(x), f.evaluate(x) - g.evaluate(x));
    ASSERT_EQ((-f).evaluate(x), -f.evaluate(x));
    ASSERT_TRUE((f - f).empty());
  }
}

TEST(SparseModPoly, NoZeroCoefficientsStored) {
  SparseModPoly f(3, 2);
  f.add_term({1, 0}, 2);
  f.add_term({1, 0}, 1);
  EXPECT_TRUE(f.empty());
  f.add_term({0, 1}, 4);
  EXPECT_EQ(f.coefficient({0, 1}), 1u);
  EXPECT_EQ(f.scaled(3).size(), 0u);
}

TEST(SparseModPoly, DerivativeUsesFallingFactorial) {
  // d^2/dL1^2 of L1^4 L2 = 12 L1^2 L2, and 12 = 2 mod 5.
  const SparseModPoly f = SparseModPoly::monomial(5, {4, 1}, 1);
  EXPECT_EQ(f.derivative(0, 2), SparseModPoly::monomial(5, {2, 1}, 2));
  EXPECT_TRUE(f.derivative(1, 2).empty());
  // d^p kills everything of degree < 2p in characteristic p.
  EXPECT_TRUE(SparseModPoly::monomial(3, {4}, 1).derivative(0, 3).empty());
  EXPECT_EQ(f.derivative(0, 0), f);
}

TEST(SparseModPoly, LaurentShiftAndEvaluation) {
  const auto F = make_field(7, 1);
  const SparseModPoly f = SparseModPoly::monomial(7, {2, 1}, 3);
  const SparseModPoly g = f.shifted({-3, 1});
  EXPECT_EQ(g.coefficient({-1, 2}), 3u);
  EXPECT_EQ(g.min_exponent(), -1);
  const std::vector<FieldElement> x{F->from_int(2), F->from_int(3)};
  EXPECT_EQ(g.evaluate(x), F->from_int(3) * inverse(F->from_int(2)) * F->from_int(9));
  EXPECT_THROW(g.derivative(0), InputError);
}

TEST(SparseModPoly, ToString) {
  SparseModPoly f(3, 2);
  EXPECT_EQ(f.to_string(), "0");
  f.add_term({2, 0}, 2);
  f.add_term({0, 0}, 1);
  EXPECT_NE(f.to_string().find("L1^2"), std::string::npos);
}

TEST(Dense, CofactorAgreesWithGauss) {
  std::mt19937_64 rng(9);
  for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {101u, 1u}}) {
    const auto F = make_field(p, m);
    for (std::size_t n = 1; n <= 6; ++n) {
      for (int it = 0; it < 20; ++it) {
        Matrix<FieldElement> a(n, n, F->zero());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) a(i, j) = F->element(rng() % F->size());
        ASSERT_EQ(det_cofactor(a), det_gauss(a));
      }
    }
  }
}

// det(I - tM) evaluated at every t in F via Gaussian elimination; enough
// points pin down a polynomial of degree <= dim when q > dim.
TEST(Dense, BerkowitzMatchesPointwiseDeterminants) {
  std::mt19937_64 rng(17);
  for (auto [p, m] : {std::pair{2u, 5u}, {3u, 3u}, {101u, 1u}}) {
    const auto F = make_field(p, m);
    for (std::size_t n = 1; n <= 9; ++n) {
      Matrix<FieldElement> a(n, n, F->zero());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = F->element(rng() % F->size());
      const std::vector<FieldElement> c = berkowitz_rev_charpoly(a);
      ASSERT_LE(c.size(), n + 1);
      for (const FieldElement& t : all_elements(*F)) {
        Matrix<FieldElement> b(n, n, F->zero());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) b(i, j) = (i == j ? F->one() : F->zero()) - t * a(i, j);
        FieldElement value = F->zero();
        for (std::size_t k = c.size(); k-- > 0;) value = value * t + c[k];
        ASSERT_EQ(value, det_gauss(b));
      }
    }
  }
}

TEST(Dense, BerkowitzOverPolynomialRing) {
  // The division-free algorithm must also work over a ring without inverses.
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 4; ++n) {
    Matrix<SparseModPoly> a(n, n, SparseModPoly(5, 2));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = random_poly(rng, 5, 2, 3, 2);
    const auto c = berkowitz_rev_charpoly(a);
    // The top coefficient is (-1)^n det M.
    SparseModPoly top = det_cofactor(a);
    if (n % 2) top = -top;
    ASSERT_EQ(c.size() == n + 1 ? c[n] : SparseModPoly(5, 2), top);
  }
}

TEST(Series, ExactInverseOfGeometric) {
  const ExactSeries one_minus_qt{{BigInt(1), BigInt(-3)}};
  const ExactSeries inv = inverse(one_minus_qt, 6);
  for (std::size_t m = 0; m <= 6; ++m) EXPECT_EQ(inv.coeffs[m], pow(BigInt(3), static_cast<unsigned>(m)));
  const ExactSeries prod = mul_trunc(inv, one_minus_qt, 6);
  EXPECT_EQ(prod.coeffs[0], 1);
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(prod.coeffs[m], 0);
}

TEST(Series, ModPInverse) {
  const SeriesModP f = series_from_poly(5, {1, 2, 3}, 8);
  const SeriesModP g = inverse(f, 8);
  const SeriesModP h = mul_trunc(f, g, 8);
  EXPECT_EQ(h, series_from_poly(5, {1}, 8));
  EXPECT_THROW(inverse(series_from_poly(5, {0, 1}, 3), 3), InputError);
}

TEST(Series, LargeCoefficientsStayExact) {
  ExactSeries f{{BigInt(1), BigInt(-1) * pow(BigInt(10), 30)}};
  const ExactSeries inv = inverse(f, 4);
  EXPECT_EQ(inv.coeffs[4], pow(BigInt(10), 120));
  EXPECT_EQ(inv.to_strings()[1], "1" + std::string(30, '0'));
}

}  // namespace
}  // namespace hwm
