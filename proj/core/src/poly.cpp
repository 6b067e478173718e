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

#include "ngsinger/poly.hpp"

#include <algorithm>
#include <sstream>

#include "ngsinger/error.hpp"

namespace ngs {

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and small.
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
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

PrimePower PrimePower::make(std::uint32_t p, std::uint32_t k) {
  require(is_prime(p), Errc::NonPrime, std::to_string(p) + " is not prime");
  require(k >= 1, Errc::NonPrime, "exponent must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    require(q < (1ULL << 40), Errc::BoundExceeded, "prime power too large");
  }
  return {p, k, q};
}

PrimePower PrimePower::from_q(std::uint64_t q) {
  require(q >= 2, Errc::NonPrime, std::to_string(q) + " is not a prime power");
  auto divs = prime_divisors(q);
  require(divs.size() == 1, Errc::NonPrime,
          std::to_string(q) + " is not a prime power");
  std::uint32_t p = static_cast<std::uint32_t>(divs[0]);
  std::uint32_t k = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++k;
  return make(p, k);
}

Poly::Poly(std::uint32_t p, std::vector<std::uint32_t> ascending)
    : p_(p), c_(std::move(ascending)) {
  for (auto& c : c_) c %= p_;
  trim();
}

Poly Poly::monomial(std::uint32_t p, std::size_t degree, std::uint32_t c) {
  std::vector<std::uint32_t> v(degree + 1, 0);
  v[degree] = c;
  return Poly(p, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t Poly::eval(std::uint32_t x) const noexcept {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = (acc * x + *it) % p_;
  return static_cast<std::uint32_t>(acc);
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = (coeff(i) + o.coeff(i)) % p_;
  return Poly(p_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<std::uint32_t> v(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = (coeff(i) + p_ - o.coeff(i)) % p_;
  return Poly(p_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(p_);
  std::vector<std::uint64_t> acc(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i]) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t{c_[i]} * o.c_[j]) % p_;
  }
  std::vector<std::uint32_t> v(acc.begin(), acc.end());
  return Poly(p_, std::move(v));
}

void Poly::divmod(const Poly& m, Poly& quot, Poly& rem) const {
  require(!m.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
  std::vector<std::uint32_t> r = c_;
  const std::size_t dm = m.c_.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.leading(), p_);
  std::vector<std::uint32_t> q(r.size() >= m.c_.size() ? r.size() - dm : 0, 0);
  for (std::size_t i = r.size(); i-- > dm;) {
    std::uint32_t c = r[i];
    if (!c) continue;
    std::uint64_t f = std::uint64_t{c} * lead_inv % p_;
    q[i - dm] = static_cast<std::uint32_t>(f);
    for (std::size_t j = 0; j <= dm; ++j) {
      std::uint64_t sub = f * m.c_[j] % p_;
      r[i - dm + j] = static_cast<std::uint32_t>((r[i - dm + j] + p_ - sub) % p_);
    }
  }
  quot = Poly(p_, std::move(q));
  rem = Poly(p_, std::move(r));
}

Poly Poly::operator%(const Poly& m) const {
  Poly q(p_), r(p_);
  divmod(m, q, r);
  return r;
}

Poly Poly::operator/(const Poly& m) const {
  Poly q(p_), r(p_);
  divmod(m, q, r);
  return q;
}

Poly Poly::make_monic() const {
  if (is_zero()) return *this;
  std::uint64_t li = inv_mod(leading(), p_);
  std::vector<std::uint32_t> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    v[i] = static_cast<std::uint32_t>(c_[i] * li % p_);
  return Poly(p_, std::move(v));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (!c_[i]) continue;
    if (!first) os << '+';
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << 'X';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.make_monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result(base.characteristic(), {1});
  result = result % m;
  Poly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return result;
}

bool is_irreducible(std::uint32_t p, const Poly& f) {
  require(f.characteristic() == p, Errc::PreconditionFailed,
          "characteristic mismatch");
  require(f.is_monic() && f.degree() >= 1, Errc::NotMonic,
          "expected a monic polynomial of positive degree, got " + f.to_string());
  const int n = f.degree();
  if (n == 1) return true;
  const Poly x = Poly::monomial(p, 1);
  Poly h = x % f;  // X^{p^d} mod f
  for (int d = 1; d <= n / 2; ++d) {
    h = powmod(h, p, f);
    if (gcd(f, h - x).degree() != 0) return false;
  }
  return true;
}

}  // namespace ngs
