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

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngsinger/poly.hpp"

namespace ngs {

class FieldCtx;

/// An element of F_{p^n}, stored as its power-basis coordinates packed into a
/// single integer. The packing is big-endian in the coordinate sequence
/// (c_0, ..., c_{n-1}): c_0 carries weight p^{n-1}. Consequently comparing
/// codes compares coordinate sequences lexicographically, constant term
/// first, which is the canonical enumeration order of the field.
///
/// An Elt refers to its FieldCtx by pointer; the context must outlive it.
class Elt {
 public:
  Elt() = default;

  const FieldCtx* ctx() const noexcept { return ctx_; }
  std::uint32_t code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept;

  Elt operator+(const Elt& o) const;
  Elt operator-(const Elt& o) const;
  Elt operator*(const Elt& o) const;
  /// Throws DivisionByZero when o is zero.
  Elt operator/(const Elt& o) const;
  Elt operator-() const;

  Elt& operator+=(const Elt& o) { return *this = *this + o; }
  Elt& operator-=(const Elt& o) { return *this = *this - o; }
  Elt& operator*=(const Elt& o) { return *this = *this * o; }
  Elt& operator/=(const Elt& o) { return *this = *this / o; }

  Elt pow(std::uint64_t e) const;
  Elt inv() const;
  Elt square() const { return *this * *this; }

  /// Coordinates c_0..c_{n-1} in the power basis of the modulus root.
  std::vector<std::uint32_t> coords() const;

  friend bool operator==(const Elt& a, const Elt& b) noexcept {
    return a.ctx_ == b.ctx_ && a.code_ == b.code_;
  }
  /// Enumeration (coordinate-lexicographic) order.
  friend std::strong_ordering operator<=>(const Elt& a, const Elt& b) noexcept {
    return a.code_ <=> b.code_;
  }

 private:
  friend class FieldCtx;
  Elt(const FieldCtx* ctx, std::uint32_t code) : ctx_(ctx), code_(code) {}

  const FieldCtx* ctx_ = nullptr;
  std::uint32_t code_ = 0;
};

struct FieldOptions {
  /// Fields up to this many elements get exp/log/Zech tables.
  std::uint64_t log_table_bound = 1ULL << 20;
  /// Discrete logs are only computed when p^n - 1 is at most this.
  std::uint64_t dlog_bound = 1ULL << 26;
};

/// Serializable identity of a field: enough to rebuild it exactly.
struct FieldDescriptor {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> modulus;    // ascending, monic, length n+1
  std::vector<std::uint32_t> primitive;  // coordinates, length n

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// A concrete finite field F_{p^n} with a fixed irreducible modulus and a
/// distinguished primitive element. Immutable after construction.
class FieldCtx {
 public:
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t order() const noexcept { return order_; }
  /// p^n - 1.
  std::uint64_t group_order() const noexcept { return order_ - 1; }
  const Poly& modulus() const noexcept { return modulus_; }
  bool has_log_tables() const noexcept { return !exp_.empty(); }
  const FieldOptions& options() const noexcept { return opts_; }

  Elt zero() const { return Elt(this, 0); }
  Elt one() const { return Elt(this, one_code_); }
  Elt primitive() const { return Elt(this, primitive_code_); }
  /// The residue class of X.
  Elt x() const;
  /// The prime-field element c mod p.
  Elt constant(std::int64_t c) const;
  /// Element with the given packed code; code < order().
  Elt element(std::uint64_t code) const;
  Elt from_coords(std::span<const std::uint32_t> coords) const;
  /// primitive^k.
  Elt exp(std::uint64_t k) const;

  /// k in [0, p^n - 1) with primitive^k = e. Uses the log table when
  /// present and baby-step giant-step otherwise.
  /// Throws ZeroElement, BoundExceeded.
  std::uint64_t discrete_log(const Elt& e) const;
  /// Baby-step giant-step regardless of tables.
  std::uint64_t discrete_log_bsgs(const Elt& e) const;
  bool dlog_available() const noexcept { return group_order() <= opts_.dlog_bound; }

  bool is_square(const Elt& e) const;
  /// The square root with lexicographically least coordinates.
  /// Throws NotASquare.
  Elt sqrt(const Elt& e) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(const Elt& e) const;
  bool is_primitive(const Elt& e) const;

  FieldDescriptor descriptor() const;

  // Code-level kernels; used by Elt.
  std::uint32_t add_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_code(std::uint32_t a) const;
  std::uint32_t mul_code(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_code(std::uint32_t a) const;
  std::uint32_t pow_code(std::uint32_t a, std::uint64_t e) const;

  /// Polynomial-basis multiplication without tables (reference path).
  std::uint32_t mul_code_poly(std::uint32_t a, std::uint32_t b) const;

  std::vector<std::uint32_t> decode(std::uint32_t code) const;
  std::uint32_t encode(std::span<const std::uint32_t> coords) const;

 private:
  friend FieldPtr make_extension(std::uint32_t, std::uint32_t,
                                 std::optional<Poly>, FieldOptions);
  FieldCtx(std::uint32_t p, std::uint32_t n, Poly modulus, FieldOptions opts);

  std::uint32_t add_code_digits(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow_code_poly(std::uint32_t a, std::uint64_t e) const;
  bool is_primitive_code(std::uint32_t c) const;
  void build_tables();
  Elt sqrt_tonelli_shanks(const Elt& e) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint64_t order_;
  Poly modulus_;
  FieldOptions opts_;
  std::vector<std::uint32_t> weight_;  // weight_[i] = p^{n-1-i}
  std::uint32_t one_code_ = 0;
  std::uint32_t primitive_code_ = 0;
  std::vector<std::uint32_t> exp_, log_, zech_;
};

/// Builds F_{p^n}. With no modulus, the lexicographically least monic
/// irreducible of degree n is used (coefficients compared constant term
/// first). The primitive element is the class of X when that is primitive,
/// otherwise the least primitive element in enumeration order.
/// Throws NonPrime, ReduciblePoly, DegreeMismatch, NotMonic, BoundExceeded.
FieldPtr make_extension(std::uint32_t p, std::uint32_t n,
                        std::optional<Poly> modulus = std::nullopt,
                        FieldOptions opts = {});

/// Rebuilds the field from a descriptor and checks the primitive matches.
/// Throws InvalidCertificate on mismatch.
FieldPtr field_from_descriptor(const FieldDescriptor& d, FieldOptions opts = {});

/// Polynomial sum_i c_i X^{e_i} with field coefficients and arbitrary
/// (typically q-power) exponents.
struct SparseTerm {
  std::uint64_t exponent;
  Elt coeff;
};

class SparsePoly {
 public:
  SparsePoly() = default;
  explicit SparsePoly(std::vector<SparseTerm> terms) : terms_(std::move(terms)) {}

  const std::vector<SparseTerm>& terms() const noexcept { return terms_; }
  Elt eval(const Elt& x) const;

 private:
  std::vector<SparseTerm> terms_;
};

Elt poly_eval(const SparsePoly& f, const Elt& x);
/// Roots among `domain`, in domain order.
std::vector<Elt> poly_roots(const SparsePoly& f, std::span<const Elt> domain);

/// Dense polynomial with field coefficients, ascending.
class EltPoly {
 public:
  EltPoly() = default;
  explicit EltPoly(std::vector<Elt> ascending);

  const std::vector<Elt>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Elt eval(const Elt& x) const;
  /// Multiplies by (X - root).
  EltPoly times_linear(const Elt& root) const;

  friend bool operator==(const EltPoly&, const EltPoly&) = default;

 private:
  std::vector<Elt> c_;
};

}  // namespace ngs

template <>
struct std::hash<ngs::Elt> {
  std::size_t operator()(const ngs::Elt& e) const noexcept {
    return std::hash<std::uint32_t>{}(e.code());
  }
};
