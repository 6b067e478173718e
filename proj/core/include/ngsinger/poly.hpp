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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ngs {

bool is_prime(std::uint64_t n) noexcept;

/// Distinct prime divisors of n, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// A prime power q = p^k.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint64_t q = 0;

  /// Throws NonPrime unless p is prime and k >= 1.
  static PrimePower make(std::uint32_t p, std::uint32_t k);
  /// Decomposes q; throws NonPrime if q is not a prime power.
  static PrimePower from_q(std::uint64_t q);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Dense univariate polynomial over the prime field F_p. Coefficients are
/// stored ascending (constant term first) with no trailing zeros; the zero
/// polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(std::uint32_t p) : p_(p) {}
  Poly(std::uint32_t p, std::vector<std::uint32_t> ascending);

  static Poly monomial(std::uint32_t p, std::size_t degree, std::uint32_t c = 1);

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t coeff(std::size_t i) const noexcept {
    return i < c_.size() ? c_[i] : 0;
  }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
  std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

  std::uint32_t eval(std::uint32_t x) const noexcept;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator%(const Poly& m) const;
  Poly operator/(const Poly& m) const;

  /// Remainder and quotient in one pass.
  void divmod(const Poly& m, Poly& quot, Poly& rem) const;

  Poly make_monic() const;

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Human-readable form, highest degree first, e.g. "X^3+2X+1".
  std::string to_string() const;

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

Poly gcd(Poly a, Poly b);

/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Irreducibility over F_p via gcd(f, X^{p^d} - X) = 1 for d <= deg(f)/2.
/// Throws NotMonic if f is not monic of degree >= 1.
bool is_irreducible(std::uint32_t p, const Poly& f);

}  // namespace ngs
