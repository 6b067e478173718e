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

#include "ngsinger/field.hpp"

#include <cmath>
#include <unordered_map>

#include "ngsinger/error.hpp"

namespace ngs {

namespace {

constexpr std::uint64_t kMaxOrder = 1ULL << 31;

const FieldCtx& ctx_of(const Elt& a, const Elt& b) {
  require(a.ctx() != nullptr && a.ctx() == b.ctx(), Errc::MixedContexts,
          "operands belong to different fields");
  return *a.ctx();
}

const FieldCtx& ctx_of(const Elt& a) {
  require(a.ctx() != nullptr, Errc::MixedContexts, "element has no field");
  return *a.ctx();
}

}  // namespace

// ---------------------------------------------------------------------------
// Elt

bool Elt::is_one() const noexcept {
  return ctx_ != nullptr && *this == ctx_->one();
}

Elt Elt::operator+(const Elt& o) const {
  const auto& f = ctx_of(*this, o);
  return Elt(&f, f.add_code(code_, o.code_));
}

Elt Elt::operator-(const Elt& o) const {
  const auto& f = ctx_of(*this, o);
  return Elt(&f, f.add_code(code_, f.neg_code(o.code_)));
}

Elt Elt::operator*(const Elt& o) const {
  const auto& f = ctx_of(*this, o);
  return Elt(&f, f.mul_code(code_, o.code_));
}

Elt Elt::operator/(const Elt& o) const {
  const auto& f = ctx_of(*this, o);
  require(!o.is_zero(), Errc::DivisionByZero, "division by zero");
  return Elt(&f, f.mul_code(code_, f.inv_code(o.code_)));
}

Elt Elt::operator-() const {
  const auto& f = ctx_of(*this);
  return Elt(&f, f.neg_code(code_));
}

Elt Elt::pow(std::uint64_t e) const {
  const auto& f = ctx_of(*this);
  return Elt(&f, f.pow_code(code_, e));
}

Elt Elt::inv() const {
  const auto& f = ctx_of(*this);
  require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
  return Elt(&f, f.inv_code(code_));
}

std::vector<std::uint32_t> Elt::coords() const {
  return ctx_of(*this).decode(code_);
}

// ---------------------------------------------------------------------------
// FieldCtx construction

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t n, Poly modulus,
                   FieldOptions opts)
    : p_(p), n_(n), order_(1), modulus_(std::move(modulus)), opts_(opts) {
  for (std::uint32_t i = 0; i < n_; ++i) order_ *= p_;
  weight_.resize(n_);
  std::uint32_t w = 1;
  for (std::uint32_t i = n_; i-- > 0;) {
    weight_[i] = w;
    w *= p_;
  }
  one_code_ = weight_[0];

  if (is_primitive_code(x().code())) {
    primitive_code_ = x().code();
  } else {
    for (std::uint32_t c = 1; c < order_; ++c) {
      if (is_primitive_code(c)) {
        primitive_code_ = c;
        break;
      }
    }
  }
  require(primitive_code_ != 0, Errc::NoCompatibleRoot, "no primitive element");
  if (order_ <= opts_.log_table_bound) build_tables();
}

FieldPtr make_extension(std::uint32_t p, std::uint32_t n,
                        std::optional<Poly> modulus, FieldOptions opts) {
  require(is_prime(p), Errc::NonPrime, std::to_string(p) + " is not prime");
  require(n >= 1, Errc::DegreeMismatch, "degree must be positive");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    order *= p;
    require(order <= kMaxOrder, Errc::BoundExceeded,
            "field order exceeds 2^31");
  }

  Poly chosen(p);
  if (modulus) {
    require(modulus->characteristic() == p, Errc::DegreeMismatch,
            "modulus has the wrong characteristic");
    require(modulus->degree() == static_cast<int>(n), Errc::DegreeMismatch,
            "modulus degree " + std::to_string(modulus->degree()) +
                " != " + std::to_string(n));
    require(modulus->is_monic(), Errc::NotMonic, "modulus must be monic");
    require(is_irreducible(p, *modulus), Errc::ReduciblePoly,
            modulus->to_string() + " is reducible over F_" + std::to_string(p));
    chosen = *modulus;
  } else {
    // Lexicographic in (c_0, c_1, ..., c_{n-1}): c_0 is the most
    // significant digit of idx.
    bool found = false;
    for (std::uint64_t idx = 0; idx < order && !found; ++idx) {
      std::vector<std::uint32_t> c(n + 1, 0);
      std::uint64_t r = idx;
      for (std::uint32_t i = n; i-- > 0;) {
        c[i] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      c[n] = 1;
      Poly f(p, std::move(c));
      if (is_irreducible(p, f)) {
        chosen = std::move(f);
        found = true;
      }
    }
    require(found, Errc::ReduciblePoly, "no irreducible polynomial found");
  }
  return FieldPtr(new FieldCtx(p, n, std::move(chosen), opts));
}

FieldPtr field_from_descriptor(const FieldDescriptor& d, FieldOptions opts) {
  require(d.modulus.size() == d.n + 1, Errc::InvalidCertificate,
          "modulus length does not match degree");
  for (auto c : d.modulus)
    require(c < d.p, Errc::InvalidCertificate, "modulus coefficient out of range");
  auto f = make_extension(d.p, d.n, Poly(d.p, d.modulus), opts);
  require(d.primitive.size() == d.n, Errc::InvalidCertificate,
          "primitive has wrong length");
  for (auto c : d.primitive)
    require(c < d.p, Errc::InvalidCertificate, "primitive coordinate out of range");
  require(f->from_coords(d.primitive) == f->primitive(), Errc::InvalidCertificate,
          "recorded primitive differs from the canonical one");
  return f;
}

void FieldCtx::build_tables() {
  const std::uint64_t N = group_order();
  exp_.assign(N, 0);
  log_.assign(order_, 0);
  std::uint32_t cur = one_code_;
  for (std::uint64_t k = 0; k < N; ++k) {
    exp_[k] = cur;
    log_[cur] = static_cast<std::uint32_t>(k);
    cur = mul_code_poly(cur, primitive_code_);
  }
  // zech_[d] = log(1 + g^d), or N when 1 + g^d = 0.
  zech_.assign(N, static_cast<std::uint32_t>(N));
  for (std::uint64_t d = 0; d < N; ++d) {
    std::uint32_t s = add_code_digits(one_code_, exp_[d]);
    if (s != 0) zech_[d] = log_[s];
  }
}

// ---------------------------------------------------------------------------
// Encoding

std::vector<std::uint32_t> FieldCtx::decode(std::uint32_t code) const {
  std::vector<std::uint32_t> c(n_);
  for (std::uint32_t i = n_; i-- > 0;) {
    c[i] = code % p_;
    code /= p_;
  }
  return c;
}

std::uint32_t FieldCtx::encode(std::span<const std::uint32_t> coords) const {
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < n_; ++i) code = code * p_ + coords[i];
  return code;
}

Elt FieldCtx::x() const {
  if (n_ == 1) {
    // X = -c_0 modulo X + c_0.
    return constant(-static_cast<std::int64_t>(modulus_.coeff(0)));
  }
  return Elt(this, weight_[1]);
}

Elt FieldCtx::constant(std::int64_t c) const {
  std::int64_t r = c % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Elt(this, static_cast<std::uint32_t>(r) * weight_[0]);
}

Elt FieldCtx::element(std::uint64_t code) const {
  require(code < order_, Errc::BoundExceeded, "element code out of range");
  return Elt(this, static_cast<std::uint32_t>(code));
}

Elt FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
  require(coords.size() == n_, Errc::DegreeMismatch, "wrong coordinate count");
  for (auto c : coords) require(c < p_, Errc::DegreeMismatch, "coordinate >= p");
  return Elt(this, encode(coords));
}

Elt FieldCtx::exp(std::uint64_t k) const {
  if (has_log_tables()) return Elt(this, exp_[k % group_order()]);
  return Elt(this, pow_code(primitive_code_, k));
}

FieldDescriptor FieldCtx::descriptor() const {
  FieldDescriptor d;
  d.p = p_;
  d.n = n_;
  d.modulus.resize(n_ + 1);
  for (std::uint32_t i = 0; i <= n_; ++i) d.modulus[i] = modulus_.coeff(i);
  d.primitive = decode(primitive_code_);
  return d;
}

// ---------------------------------------------------------------------------
// Arithmetic kernels

std::uint32_t FieldCtx::add_code_digits(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, w = 1;
  while (a || b) {
    std::uint32_t d = (a % p_ + b % p_) % p_;
    out += d * w;
    a /= p_;
    b /= p_;
    w *= p_;
  }
  return out;
}

std::uint32_t FieldCtx::add_code(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  if (a == 0) return b;
  if (b == 0) return a;
  if (!has_log_tables()) return add_code_digits(a, b);
  // a + b = a * (1 + b/a) through the Zech table.
  const std::uint32_t N = static_cast<std::uint32_t>(group_order());
  std::uint32_t la = log_[a], lb = log_[b];
  std::uint32_t d = lb >= la ? lb - la : lb + N - la;
  std::uint32_t z = zech_[d];
  if (z == N) return 0;
  std::uint32_t s = la + z;
  if (s >= N) s -= N;
  return exp_[s];
}

std::uint32_t FieldCtx::neg_code(std::uint32_t a) const {
  if (p_ == 2 || a == 0) return a;
  std::uint32_t out = 0, w = 1;
  while (a) {
    std::uint32_t d = a % p_;
    out += ((p_ - d) % p_) * w;
    a /= p_;
    w *= p_;
  }
  return out;
}

std::uint32_t FieldCtx::mul_code_poly(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  auto ca = decode(a), cb = decode(b);
  std::vector<std::uint64_t> r(2 * n_ - 1, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (!ca[i]) continue;
    for (std::uint32_t j = 0; j < n_; ++j)
      r[i + j] = (r[i + j] + std::uint64_t{ca[i]} * cb[j]) % p_;
  }
  // Reduce by the monic modulus: X^n = -sum_{j<n} m_j X^j.
  for (std::size_t i = r.size(); i-- > n_;) {
    std::uint64_t c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (std::uint32_t j = 0; j < n_; ++j) {
      std::uint64_t sub = c * modulus_.coeff(j) % p_;
      r[i - n_ + j] = (r[i - n_ + j] + p_ - sub) % p_;
    }
  }
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < n_; ++i)
    code = code * p_ + static_cast<std::uint32_t>(r[i]);
  return code;
}

std::uint32_t FieldCtx::mul_code(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (!has_log_tables()) return mul_code_poly(a, b);
  const std::uint32_t N = static_cast<std::uint32_t>(group_order());
  std::uint32_t s = log_[a] + log_[b];
  if (s >= N) s -= N;
  return exp_[s];
}

std::uint32_t FieldCtx::inv_code(std::uint32_t a) const {
  require(a != 0, Errc::DivisionByZero, "inverse of zero");
  if (!has_log_tables()) return pow_code_poly(a, group_order() - 1);
  const std::uint32_t N = static_cast<std::uint32_t>(group_order());
  std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : N - l];
}

std::uint32_t FieldCtx::pow_code_poly(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = one_code_, base = a;
  while (e) {
    if (e & 1) result = mul_code_poly(result, base);
    base = mul_code_poly(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldCtx::pow_code(std::uint32_t a, std::uint64_t e) const {
  if (e == 0) return one_code_;
  if (a == 0) return 0;
  const std::uint64_t N = group_order();
  if (!has_log_tables()) return pow_code_poly(a, e % N);
  std::uint64_t l = (std::uint64_t{log_[a]} * (e % N)) % N;
  return exp_[l];
}

// ---------------------------------------------------------------------------
// Orders, logs, squares

bool FieldCtx::is_primitive_code(std::uint32_t c) const {
  if (c == 0) return false;
  const std::uint64_t N = group_order();
  if (N == 1) return c == one_code_;
  if (pow_code_poly(c, N) != one_code_) return false;
  for (auto r : prime_divisors(N))
    if (pow_code_poly(c, N / r) == one_code_) return false;
  return true;
}

bool FieldCtx::is_primitive(const Elt& e) const {
  require(e.ctx() == this, Errc::MixedContexts, "foreign element");
  return is_primitive_code(e.code());
}

std::uint64_t FieldCtx::multiplicative_order(const Elt& e) const {
  require(e.ctx() == this, Errc::MixedContexts, "foreign element");
  require(!e.is_zero(), Errc::ZeroElement, "zero has no multiplicative order");
  std::uint64_t ord = group_order();
  for (auto r : prime_divisors(group_order())) {
    while (ord % r == 0 && pow_code(e.code(), ord / r) == one_code_) ord /= r;
  }
  return ord;
}

std::uint64_t FieldCtx::discrete_log(const Elt& e) const {
  require(e.ctx() == this, Errc::MixedContexts, "foreign element");
  require(!e.is_zero(), Errc::ZeroElement, "discrete log of zero");
  require(dlog_available(), Errc::BoundExceeded,
          "field too large for discrete logs");
  if (has_log_tables()) return log_[e.code()];
  return discrete_log_bsgs(e);
}

std::uint64_t FieldCtx::discrete_log_bsgs(const Elt& e) const {
  require(e.ctx() == this, Errc::MixedContexts, "foreign element");
  require(!e.is_zero(), Errc::ZeroElement, "discrete log of zero");
  require(dlog_available(), Errc::BoundExceeded,
          "field too large for discrete logs");
  const std::uint64_t N = group_order();
  const std::uint64_t m =
      static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(N))));
  std::unordered_map<std::uint32_t, std::uint64_t> baby;
  baby.reserve(m * 2);
  std::uint32_t cur = one_code_;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(cur, j);
    cur = mul_code_poly(cur, primitive_code_);
  }
  // giant = g^{-m}
  const std::uint32_t giant =
      pow_code_poly(primitive_code_, (N - (m % N)) % N);
  std::uint32_t gamma = e.code();
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(gamma);
    if (it != baby.end()) return (i * m + it->second) % N;
    gamma = mul_code_poly(gamma, giant);
  }
  fail(Errc::OracleMismatch, "baby-step giant-step found no logarithm");
}

bool FieldCtx::is_square(const Elt& e) const {
  require(e.ctx() == this, Errc::MixedContexts, "foreign element");
  if (p_ == 2 || e.is_zero()) return true;
  return pow_code(e.code(), group_order() / 2) == one_code_;
}

Elt FieldCtx::sqrt_tonelli_shanks(const Elt& a) const {
  std::uint64_t m = group_order();
  std::uint32_t s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  Elt z;
  for (std::uint32_t c = 1; c < order_; ++c) {
    Elt cand(this, c);
    if (!is_square(cand)) {
      z = cand;
      break;
    }
  }
  Elt c = z.pow(m);
  Elt t = a.pow(m);
  Elt r = a.pow((m + 1) / 2);
  std::uint32_t M = s;
  while (!t.is_one()) {
    std::uint32_t i = 0;
    Elt tt = t;
    while (!tt.is_one()) {
      tt = tt * tt;
      ++i;
    }
    Elt b = c;
    for (std::uint32_t j = 0; j + i + 1 < M; ++j) b = b * b;
    M = i;
    c = b * b;
    t = t * c;
    r = r * b;
  }
  return r;
}

Elt FieldCtx::sqrt(const Elt& e) const {
  require(e.ctx() == this, Errc::MixedContexts, "foreign element");
  require(is_square(e), Errc::NotASquare, "element is not a square");
  if (e.is_zero()) return e;
  if (p_ == 2) return e.pow(order_ / 2);  // Frobenius inverse
  Elt r = has_log_tables() ? Elt(this, exp_[log_[e.code()] / 2])
                           : sqrt_tonelli_shanks(e);
  Elt other = -r;
  return other < r ? other : r;
}

// ---------------------------------------------------------------------------
// Polynomials with field coefficients

Elt SparsePoly::eval(const Elt& x) const {
  require(x.ctx() != nullptr, Errc::MixedContexts, "element has no field");
  Elt acc = x.ctx()->zero();
  for (const auto& t : terms_) acc += t.coeff * x.pow(t.exponent);
  return acc;
}

Elt poly_eval(const SparsePoly& f, const Elt& x) { return f.eval(x); }

std::vector<Elt> poly_roots(const SparsePoly& f, std::span<const Elt> domain) {
  std::vector<Elt> out;
  for (const auto& x : domain)
    if (f.eval(x).is_zero()) out.push_back(x);
  return out;
}

EltPoly::EltPoly(std::vector<Elt> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Elt EltPoly::eval(const Elt& x) const {
  Elt acc = x.ctx()->zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

EltPoly EltPoly::times_linear(const Elt& root) const {
  const auto* f = root.ctx();
  std::vector<Elt> out(c_.size() + 1, f->zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i + 1] += c_[i];
    out[i] -= c_[i] * root;
  }
  return EltPoly(std::move(out));
}

}  // namespace ngs
