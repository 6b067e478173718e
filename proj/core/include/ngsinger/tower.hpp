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
#include <memory>
#include <vector>

#include "ngsinger/field.hpp"

namespace ngs {

/// The cyclic extension F_{q^t} / F_q viewed inside one ambient field
/// F_{p^{kt}}. The base field is the fixed set of x -> x^q.
///
/// The degree is always the actual extension degree: a projective norm
/// graph NG(q, s) uses a tower of degree s - 1.
class TowerCtx {
 public:
  /// Builds the ambient field F_{p^{kt}} with its canonical modulus.
  static std::shared_ptr<const TowerCtx> make(std::uint64_t q, std::uint32_t t,
                                              FieldOptions opts = {});
  /// Views an existing field of order q^t as a degree-t extension.
  static std::shared_ptr<const TowerCtx> over(FieldPtr ambient, std::uint64_t q,
                                              std::uint32_t t);

  const FieldPtr& ambient_ptr() const noexcept { return ambient_; }
  const FieldCtx& ambient() const noexcept { return *ambient_; }
  std::uint32_t p() const noexcept { return ambient_->p(); }
  std::uint64_t q() const noexcept { return q_; }
  std::uint32_t t() const noexcept { return t_; }
  /// |N| = (q^t - 1)/(q - 1).
  std::uint64_t norm_one_order() const noexcept {
    return ambient_->group_order() / (q_ - 1);
  }

  /// x^{q^j}.
  Elt frobenius(const Elt& x, std::uint64_t j = 1) const;
  /// Product of all t conjugates.
  Elt norm(const Elt& x) const;
  /// Sum of all t conjugates.
  Elt trace(const Elt& x) const;
  /// x -> x^{q-1} (equivalently phi(x)/x). Throws ZeroElement.
  Elt hilbert90_map(const Elt& x) const;

  bool in_base(const Elt& x) const { return frobenius(x) == x; }
  /// F_q in discrete-log order: 0 first, then g^{m i} for i = 0..q-2 with
  /// m = (q^t - 1)/(q - 1).
  const std::vector<Elt>& base_elements() const noexcept { return base_; }
  /// Index of a nonzero base element among the q - 1 units, in log order.
  std::uint64_t base_unit_index(const Elt& a) const;

 private:
  TowerCtx(FieldPtr ambient, std::uint64_t q, std::uint32_t t);

  FieldPtr ambient_;
  std::uint64_t q_;
  std::uint32_t t_;
  std::vector<std::uint64_t> frob_exp_;  // q^j mod (p^n - 1), j = 0..t
  std::uint64_t norm_exp_;
  std::vector<Elt> base_;
  std::vector<std::int32_t> base_index_;  // by code, -1 outside F_q*
};

using TowerPtr = std::shared_ptr<const TowerCtx>;

struct EnumerationBound {
  std::uint64_t max_elements = 1ULL << 24;
};

/// The cyclic group of norm-one elements, in the order generator^0,
/// generator^1, ... where generator = primitive^{q-1}. This is also
/// discrete-log order.
class NormOneGroup {
 public:
  const TowerPtr& tower() const noexcept { return tower_; }
  const std::vector<Elt>& elements() const noexcept { return elements_; }
  const Elt& generator() const noexcept { return generator_; }
  std::size_t size() const noexcept { return elements_.size(); }
  /// Position in elements(); -1 when outside the group.
  std::int64_t index_of(const Elt& e) const;
  bool contains(const Elt& e) const { return index_of(e) >= 0; }

 private:
  friend NormOneGroup norm_one_group(const TowerPtr&, EnumerationBound);
  TowerPtr tower_;
  std::vector<Elt> elements_;
  Elt generator_;
  std::vector<std::int32_t> index_;  // by code
};

/// Enumerates N and asserts every member has norm 1. Throws BoundExceeded.
NormOneGroup norm_one_group(const TowerPtr& tc, EnumerationBound bound = {});

/// Norms of every ambient element, indexed by code.
class NormTable {
 public:
  explicit NormTable(TowerPtr tc, EnumerationBound bound = {});

  const TowerPtr& tower() const noexcept { return tower_; }
  Elt operator()(const Elt& x) const;
  std::uint32_t code(std::uint32_t x) const noexcept { return norm_[x]; }

 private:
  TowerPtr tower_;
  std::vector<std::uint32_t> norm_;
};

/// Field homomorphism F_{p^m} -> F_{p^{md}} sending the small primitive to
/// big_primitive^{s (p^{md}-1)/(p^m-1)} for the least s whose image is a root
/// of the small primitive's minimal polynomial.
class Embedding {
 public:
  Embedding(FieldPtr small, FieldPtr big);

  Elt operator()(const Elt& x) const;
  const FieldPtr& small() const noexcept { return small_; }
  const FieldPtr& big() const noexcept { return big_; }
  /// The exponent e with image(u^k) = U^{e k}, U the big primitive.
  std::uint64_t log_multiplier() const noexcept { return log_multiplier_; }
  /// Minimal polynomial of the small primitive over F_p.
  const Poly& primitive_minpoly() const noexcept { return minpoly_; }

 private:
  FieldPtr small_, big_;
  Poly minpoly_;
  std::uint64_t log_multiplier_ = 0;
  Elt image_of_primitive_;
};

/// Minimal polynomial over F_p of an element of the field.
Poly minimal_polynomial_over_prime_field(const Elt& x);

}  // namespace ngs
