// Copyright 2026 The ngsinger Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "ngsinger/error.hpp"
#include "ngsinger/tower.hpp"

namespace ngs {
namespace {

const Poly kF4096Modulus(2, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});

// Product of conjugates computed by repeated q-th powering, independent of
// the closed-form norm exponent.
Elt norm_oracle(const TowerCtx& tc, const Elt& x) {
  Elt acc = x, c = x;
  for (std::uint32_t j = 1; j < tc.t(); ++j) {
    for (std::uint32_t i = 0; i < tc.ambient().n() / tc.t(); ++i) c = c.pow(tc.p());
    acc *= c;
  }
  return acc;
}

TEST(TowerTest, FrobeniusFixesBaseAndHasOrderT) {
  auto tc = TowerCtx::make(4, 3);
  const auto& F = tc->ambient();
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    auto x = F.element(c);
    ASSERT_EQ(tc->frobenius(x, 3), x);
    bool fixed = tc->frobenius(x) == x;
    ASSERT_EQ(fixed, x.pow(tc->q()) == x);
  }
  EXPECT_EQ(tc->base_elements().size(), 4u);
  for (const auto& a : tc->base_elements()) EXPECT_TRUE(tc->in_base(a));
}

TEST(TowerTest, NormMatchesProductOfConjugates) {
  for (auto [q, t] : {std::pair{2ull, 3u}, {4ull, 3u}, {3ull, 4u}, {5ull, 3u}, {9ull, 2u},
                      {16ull, 3u}}) {
    auto tc = TowerCtx::make(q, t);
    const auto& F = tc->ambient();
    std::uint64_t step = F.order() > 5000 ? 7 : 1;
    for (std::uint64_t c = 0; c < F.order(); c += step) {
      auto x = F.element(c);
      auto n = tc->norm(x);
      ASSERT_EQ(n, norm_oracle(*tc, x));
      ASSERT_TRUE(tc->in_base(n));
      ASSERT_TRUE(tc->in_base(tc->trace(x)));
    }
  }
}

TEST(TowerTest, TraceIsSurjectiveAndBalanced) {
  auto tc = TowerCtx::make(3, 3);
  const auto& F = tc->ambient();
  std::map<std::uint32_t, int> fiber;
  for (std::uint64_t c = 0; c < F.order(); ++c) ++fiber[tc->trace(F.element(c)).code()];
  EXPECT_EQ(fiber.size(), 3u);
  for (auto [code, n] : fiber) EXPECT_EQ(n, 9);
}

TEST(TowerTest, NormOneGroupSizes) {
  EXPECT_EQ(norm_one_group(TowerCtx::make(2, 3)).size(), 7u);
  EXPECT_EQ(norm_one_group(TowerCtx::make(4, 3)).size(), 21u);
  EXPECT_EQ(norm_one_group(TowerCtx::make(2, 5)).size(), 31u);
  auto F = make_extension(2, 12, kF4096Modulus);
  auto tc = TowerCtx::over(F, 16, 3);
  auto N = norm_one_group(tc);
  EXPECT_EQ(N.size(), 273u);
  EXPECT_TRUE(N.contains(F->primitive().pow(405)));
  EXPECT_FALSE(N.contains(F->primitive()));
}

TEST(TowerTest, NormOneMembershipMatchesNormOracle) {
  auto tc = TowerCtx::make(3, 3);
  auto N = norm_one_group(tc);
  const auto& F = tc->ambient();
  std::size_t count = 0;
  for (std::uint64_t c = 1; c < F.order(); ++c) {
    auto x = F.element(c);
    bool one = norm_oracle(*tc, x).is_one();
    ASSERT_EQ(N.contains(x), one);
    count += one;
  }
  EXPECT_EQ(count, 13u);
  for (std::size_t i = 0; i < N.size(); ++i)
    EXPECT_EQ(N.index_of(N.elements()[i]), static_cast<std::int64_t>(i));
}

TEST(TowerTest, Hilbert90SurjectsOntoNormOneWithBaseKernel) {
  auto tc = TowerCtx::make(5, 3);
  auto N = norm_one_group(tc);
  const auto& F = tc->ambient();
  std::map<std::uint32_t, int> fiber;
  for (std::uint64_t c = 1; c < F.order(); ++c) {
    auto x = F.element(c);
    auto y = tc->hilbert90_map(x);
    ASSERT_TRUE(N.contains(y));
    ASSERT_EQ(y, tc->frobenius(x) / x);
    ++fiber[y.code()];
  }
  EXPECT_EQ(fiber.size(), N.size());
  for (auto [code, n] : fiber) EXPECT_EQ(n, 4);
  EXPECT_THROW(tc->hilbert90_map(F.zero()), Error);
}

TEST(TowerTest, BaseUnitIndexIsLogOrder) {
  auto tc = TowerCtx::make(7, 2);
  const auto& base = tc->base_elements();
  ASSERT_EQ(base.size(), 7u);
  EXPECT_TRUE(base[0].is_zero());
  EXPECT_TRUE(base[1].is_one());
  for (std::size_t i = 1; i < base.size(); ++i)
    EXPECT_EQ(tc->base_unit_index(base[i]), i - 1);
  try {
    tc->base_unit_index(tc->ambient().primitive());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidTarget);
  }
}

TEST(TowerTest, RejectsWrongDegree) {
  auto F = make_extension(2, 12, kF4096Modulus);
  EXPECT_THROW(TowerCtx::over(F, 16, 4), Error);
  EXPECT_THROW(TowerCtx::over(F, 8, 3), Error);
}

TEST(EmbeddingTest, PrimeFieldIntoF4096) {
  auto F2 = make_extension(2, 1);
  auto F = make_extension(2, 12, kF4096Modulus);
  Embedding emb(F2, F);
  EXPECT_TRUE(emb(F2->one()).is_one());
  EXPECT_TRUE(emb(F2->zero()).is_zero());
}

void expect_homomorphism(const Embedding& emb) {
  const auto& S = *emb.small();
  for (std::uint64_t a = 0; a < S.order(); ++a)
    for (std::uint64_t b = 0; b < S.order(); ++b) {
      auto x = S.element(a), y = S.element(b);
      ASSERT_EQ(emb(x + y), emb(x) + emb(y));
      ASSERT_EQ(emb(x * y), emb(x) * emb(y));
    }
  std::set<std::uint32_t> image;
  for (std::uint64_t a = 0; a < S.order(); ++a) image.insert(emb(S.element(a)).code());
  EXPECT_EQ(image.size(), S.order());
}

TEST(EmbeddingTest, IsInjectiveHomomorphism) {
  expect_homomorphism(Embedding(make_extension(2, 2), make_extension(2, 4)));
  expect_homomorphism(Embedding(make_extension(3, 2), make_extension(3, 6)));
  expect_homomorphism(Embedding(make_extension(5, 1), make_extension(5, 3)));
}

TEST(EmbeddingTest, CompositeAgreesOnImageSet) {
  auto F4 = make_extension(2, 2), F16 = make_extension(2, 4), F256 = make_extension(2, 8);
  Embedding a(F4, F16), b(F16, F256), direct(F4, F256);
  std::set<std::uint32_t> via, dir;
  for (std::uint64_t c = 0; c < 4; ++c) {
    via.insert(b(a(F4->element(c))).code());
    dir.insert(direct(F4->element(c)).code());
  }
  EXPECT_EQ(via, dir);
}

TEST(EmbeddingTest, NormCompatibleAcrossDegrees) {
  // F_125 -> F_15625 preserves the property of lying in F_5.
  auto small = make_extension(5, 3), big = make_extension(5, 6);
  Embedding emb(small, big);
  auto ts = TowerCtx::over(small, 5, 3);
  auto tb = TowerCtx::over(big, 5, 6);
  for (std::uint64_t c = 1; c < small->order(); c += 3) {
    auto x = small->element(c);
    auto n = ts->norm(x);
    auto nb = tb->norm(emb(x));
    // N_{F_15625/F_5}(x) = N_{F_125/F_5}(x)^2 for x in F_125.
    ASSERT_EQ(nb, emb(n * n));
  }
}

TEST(MinimalPolynomialTest, PrimitiveOfF16) {
  auto F = make_extension(2, 4);
  auto m = minimal_polynomial_over_prime_field(F->primitive());
  EXPECT_EQ(m.degree(), 4);
  EXPECT_TRUE(is_irreducible(2, m));
  auto one = minimal_polynomial_over_prime_field(F->one());
  EXPECT_EQ(one.coeffs(), (std::vector<std::uint32_t>{1, 1}));
}

}  // namespace
}  // namespace ngs
