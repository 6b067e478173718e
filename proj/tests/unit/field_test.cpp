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

#include <functional>
#include <random>
#include <set>

#include "ngsinger/error.hpp"
#include "ngsinger/field.hpp"

namespace ngs {
namespace {

const Poly kF4096Modulus(2, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no ngs::Error thrown";
  return Errc::InvalidCertificate;
}

TEST(MakeExtensionTest, ExplicitF4096ModulusMakesXPrimitive) {
  auto F = make_extension(2, 12, kF4096Modulus);
  EXPECT_EQ(F->order(), 4096u);
  EXPECT_EQ(F->primitive(), F->x());
  EXPECT_TRUE(F->is_primitive(F->x()));
  EXPECT_EQ(F->multiplicative_order(F->x()), 4095u);
}

TEST(MakeExtensionTest, PrimeFieldUsesLeastModulus) {
  auto F = make_extension(5, 1);
  EXPECT_EQ(F->modulus().coeffs(), (std::vector<std::uint32_t>{0, 1}));
  EXPECT_EQ(F->constant(2) * F->constant(3), F->one());
  EXPECT_EQ(F->constant(4) + F->constant(3), F->constant(2));
  EXPECT_EQ(F->primitive(), F->constant(2));
}

TEST(MakeExtensionTest, LeastIrreducibleCubicOverF5) {
  // Frozen from the factorization oracle in poly_test: X^3 + X^2 + 1.
  auto F = make_extension(5, 3);
  EXPECT_EQ(F->modulus().coeffs(), (std::vector<std::uint32_t>{1, 0, 1, 1}));
  EXPECT_TRUE(is_irreducible(5, F->modulus()));
}

TEST(MakeExtensionTest, DeterministicAcrossCalls) {
  for (auto [p, n] : {std::pair{2u, 8u}, {3u, 6u}, {5u, 4u}, {7u, 3u}}) {
    auto a = make_extension(p, n), b = make_extension(p, n);
    EXPECT_EQ(a->descriptor(), b->descriptor());
  }
}

TEST(MakeExtensionTest, Errors) {
  EXPECT_EQ(code_of([] { make_extension(6, 2); }), Errc::NonPrime);
  EXPECT_EQ(code_of([] { make_extension(5, 2, Poly(5, {1, 0, 1})); }),
            Errc::ReduciblePoly);
  EXPECT_EQ(code_of([] { make_extension(5, 3, Poly(5, {2, 0, 1})); }),
            Errc::DegreeMismatch);
}

TEST(FieldArithmeticTest, F4096ExponentIdentities) {
  auto F = make_extension(2, 12, kF4096Modulus);
  auto U = F->primitive();
  EXPECT_TRUE((U.pow(405) * U.pow(4095 - 405)).is_one());
  EXPECT_EQ(U.pow(1065) * U.pow(3435), U.pow(405));
  EXPECT_TRUE(U.pow(4095).is_one());
}

TEST(FieldArithmeticTest, ErrorsOnZeroDivisionAndMixing) {
  auto F = make_extension(3, 2);
  auto G = make_extension(3, 3);
  EXPECT_EQ(code_of([&] { (void)(F->one() / F->zero()); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)(F->one() + G->one()); }), Errc::MixedContexts);
  EXPECT_EQ(code_of([&] { (void)F->zero().inv(); }), Errc::DivisionByZero);
}

TEST(FieldArithmeticTest, InverseAndFermatForEveryElement) {
  for (auto [p, n] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}, {13u, 2u}}) {
    auto F = make_extension(p, n);
    for (std::uint64_t c = 1; c < F->order(); ++c) {
      auto e = F->element(c);
      ASSERT_TRUE((e * e.inv()).is_one());
      ASSERT_TRUE(e.pow(F->group_order()).is_one());
      ASSERT_EQ(e + (-e), F->zero());
    }
  }
}

// Table-free polynomial-basis arithmetic is the reference for the
// log/Zech-table fast path.
TEST(FieldArithmeticTest, TablePathMatchesPolynomialPath) {
  std::mt19937_64 rng(7);
  for (auto [p, n] : {std::pair{2u, 9u}, {3u, 5u}, {5u, 4u}, {7u, 3u}}) {
    auto fast = make_extension(p, n);
    auto slow = make_extension(p, n, std::nullopt, FieldOptions{0, 1ULL << 26});
    ASSERT_TRUE(fast->has_log_tables());
    ASSERT_FALSE(slow->has_log_tables());
    ASSERT_EQ(fast->descriptor(), slow->descriptor());
    std::uniform_int_distribution<std::uint64_t> pick(0, fast->order() - 1);
    for (int i = 0; i < 2000; ++i) {
      auto a = pick(rng), b = pick(rng);
      auto e = pick(rng);
      auto fa = fast->element(a), fb = fast->element(b);
      auto sa = slow->element(a), sb = slow->element(b);
      ASSERT_EQ((fa * fb).code(), (sa * sb).code());
      ASSERT_EQ((fa + fb).code(), (sa + sb).code());
      ASSERT_EQ((fa - fb).code(), (sa - sb).code());
      ASSERT_EQ(fa.pow(e).code(), sa.pow(e).code());
      if (b) ASSERT_EQ((fa / fb).code(), (sa / sb).code());
    }
  }
}

TEST(DiscreteLogTest, Basics) {
  auto F = make_extension(2, 12, kF4096Modulus);
  EXPECT_EQ(F->discrete_log(F->one()), 0u);
  EXPECT_EQ(F->discrete_log(F->primitive()), 1u);
  EXPECT_EQ(F->discrete_log(F->primitive().pow(1725)), 1725u);
  try {
    F->discrete_log(F->zero());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroElement);
  }
}

TEST(DiscreteLogTest, InvertsExponentiationBothRoutes) {
  for (auto [p, n] : {std::pair{2u, 10u}, {3u, 6u}, {5u, 4u}}) {
    auto F = make_extension(p, n);
    auto slow = make_extension(p, n, std::nullopt, FieldOptions{0, 1ULL << 26});
    for (std::uint64_t k = 0; k < F->group_order(); ++k) {
      ASSERT_EQ(F->discrete_log(F->exp(k)), k);
      if (k % 37 == 0) {
        ASSERT_EQ(F->discrete_log_bsgs(F->exp(k)), k);
        ASSERT_EQ(slow->discrete_log(slow->exp(k)), k);
      }
    }
  }
}

TEST(DiscreteLogTest, BoundExceeded) {
  auto F = make_extension(3, 5, std::nullopt, FieldOptions{1ULL << 20, 100});
  try {
    F->discrete_log(F->one());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BoundExceeded);
  }
}

TEST(SquareTest, SmallExamples) {
  auto F5 = make_extension(5, 1);
  EXPECT_TRUE(F5->is_square(F5->constant(4)));
  EXPECT_FALSE(F5->is_square(F5->constant(2)));
  EXPECT_EQ(F5->sqrt(F5->constant(4)), F5->constant(2));
  EXPECT_EQ(F5->sqrt(F5->zero()), F5->zero());
  try {
    F5->sqrt(F5->constant(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASquare);
  }
  auto F = make_extension(2, 12, kF4096Modulus);
  for (std::uint64_t c = 1; c < F->order(); c += 97) EXPECT_TRUE(F->is_square(F->element(c)));
}

// Brute-force oracle {x^2 : x in F} on every field with p^n <= 2^13 and
// p < 100.
TEST(SquareTest, MatchesSquaresOracle) {
  for (std::uint32_t p = 2; p < 100; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t order = p;
    for (std::uint32_t n = 1; order <= 8192; ++n, order *= p) {
      auto F = make_extension(p, n);
      std::vector<bool> is_sq(F->order(), false);
      for (std::uint64_t c = 0; c < F->order(); ++c)
        is_sq[F->element(c).square().code()] = true;
      for (std::uint64_t c = 0; c < F->order(); ++c) {
        auto e = F->element(c);
        ASSERT_EQ(F->is_square(e), is_sq[c]) << "F_" << p << "^" << n;
        if (is_sq[c]) {
          auto r = F->sqrt(e);
          ASSERT_EQ(r.square(), e);
          ASSERT_LE(r.code(), (-r).code());
        }
      }
    }
  }
}

TEST(SquareTest, TonelliShanksPathAgrees) {
  for (auto [p, n] : {std::pair{3u, 5u}, {5u, 3u}, {17u, 2u}}) {
    auto slow = make_extension(p, n, std::nullopt, FieldOptions{0, 1ULL << 26});
    auto fast = make_extension(p, n);
    for (std::uint64_t c = 0; c < fast->order(); ++c) {
      auto fe = fast->element(c);
      if (!fast->is_square(fe)) continue;
      ASSERT_EQ(slow->sqrt(slow->element(c)).code(), fast->sqrt(fe).code());
    }
  }
}

TEST(SparsePolyTest, LinearRoot) {
  auto F = make_extension(3, 3);
  std::vector<Elt> domain;
  for (std::uint64_t c = 0; c < F->order(); ++c) domain.push_back(F->element(c));
  SparsePoly f({{1, F->one()}, {0, -F->one()}});
  auto roots = poly_roots(f, domain);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_TRUE(roots[0].is_one());
}

TEST(SparsePolyTest, QuarticFactorsOverF27) {
  auto F = make_extension(3, 3);
  std::vector<Elt> domain;
  for (std::uint64_t c = 0; c < F->order(); ++c) domain.push_back(F->element(c));
  auto one = F->one();
  SparsePoly h({{4, one}, {1, one}, {0, one}});
  SparsePoly m({{3, one}, {2, one}, {1, one}, {0, -one}});
  auto hr = poly_roots(h, domain);
  auto mr = poly_roots(m, domain);
  std::set<Elt> lhs(hr.begin(), hr.end());
  std::set<Elt> rhs(mr.begin(), mr.end());
  rhs.insert(one);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(hr.size(), 4u);
}

TEST(EltPolyTest, ProductOfLinearsVanishesAtRoots) {
  auto F = make_extension(7, 2);
  EltPoly f({F->one()});
  std::vector<Elt> roots{F->exp(3), F->exp(10), F->zero()};
  for (const auto& r : roots) f = f.times_linear(r);
  EXPECT_EQ(f.degree(), 3);
  for (const auto& r : roots) EXPECT_TRUE(f.eval(r).is_zero());
  EXPECT_FALSE(f.eval(F->one()).is_zero());
}

TEST(DescriptorTest, RoundTripsAndRejectsWrongPrimitive) {
  auto F = make_extension(3, 4);
  auto d = F->descriptor();
  auto G = field_from_descriptor(d);
  EXPECT_EQ(G->descriptor(), d);
  d.primitive = F->one().coords();
  try {
    field_from_descriptor(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidCertificate);
  }
}

}  // namespace
}  // namespace ngs
