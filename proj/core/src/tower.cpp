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

#include "ngsinger/tower.hpp"

#include "ngsinger/error.hpp"

namespace ngs {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  __extension__ using u128 = unsigned __int128;
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

}  // namespace

TowerPtr TowerCtx::make(std::uint64_t q, std::uint32_t t, FieldOptions opts) {
  auto pp = PrimePower::from_q(q);
  require(t >= 2, Errc::PreconditionFailed, "extension degree must be >= 2");
  return over(make_extension(pp.p, pp.k * t, std::nullopt, opts), q, t);
}

TowerPtr TowerCtx::over(FieldPtr ambient, std::uint64_t q, std::uint32_t t) {
  return TowerPtr(new TowerCtx(std::move(ambient), q, t));
}

TowerCtx::TowerCtx(FieldPtr ambient, std::uint64_t q, std::uint32_t t)
    : ambient_(std::move(ambient)), q_(q), t_(t) {
  auto pp = PrimePower::from_q(q);
  require(pp.p == ambient_->p() && pp.k * t == ambient_->n(),
          Errc::DegreeMismatch,
          "ambient field does not have order q^t");
  require(t_ >= 2, Errc::PreconditionFailed, "extension degree must be >= 2");
  const std::uint64_t N = ambient_->group_order();
  frob_exp_.resize(t_ + 1);
  frob_exp_[0] = 1;
  for (std::uint32_t j = 1; j <= t_; ++j)
    frob_exp_[j] = mulmod(frob_exp_[j - 1], q_ % N, N);
  norm_exp_ = N / (q_ - 1);

  // F_q* = <g^m>, m = |N|.
  base_.push_back(ambient_->zero());
  base_index_.assign(ambient_->order(), -1);
  for (std::uint64_t i = 0; i + 1 < q_; ++i) {
    Elt a = ambient_->exp(i * norm_exp_);
    require(frobenius(a) == a, Errc::OracleMismatch,
            "base-field element not fixed by Frobenius");
    base_index_[a.code()] = static_cast<std::int32_t>(i);
    base_.push_back(a);
  }
}

Elt TowerCtx::frobenius(const Elt& x, std::uint64_t j) const {
  require(x.ctx() == ambient_.get(), Errc::MixedContexts, "foreign element");
  j %= t_;
  if (j == 0) return x;
  return x.pow(frob_exp_[j]);
}

Elt TowerCtx::norm(const Elt& x) const {
  require(x.ctx() == ambient_.get(), Errc::MixedContexts, "foreign element");
  // prod_j x^{q^j} = x^{(q^t - 1)/(q - 1)}
  return x.pow(norm_exp_);
}

Elt TowerCtx::trace(const Elt& x) const {
  require(x.ctx() == ambient_.get(), Errc::MixedContexts, "foreign element");
  Elt acc = x;
  for (std::uint32_t j = 1; j < t_; ++j) acc += x.pow(frob_exp_[j]);
  return acc;
}

Elt TowerCtx::hilbert90_map(const Elt& x) const {
  require(x.ctx() == ambient_.get(), Errc::MixedContexts, "foreign element");
  require(!x.is_zero(), Errc::ZeroElement, "Hilbert-90 map of zero");
  return x.pow(q_ - 1);
}

std::uint64_t TowerCtx::base_unit_index(const Elt& a) const {
  require(a.ctx() == ambient_.get(), Errc::MixedContexts, "foreign element");
  auto i = base_index_[a.code()];
  require(i >= 0, Errc::InvalidTarget, "not a nonzero base-field element");
  return static_cast<std::uint64_t>(i);
}

// ---------------------------------------------------------------------------

std::int64_t NormOneGroup::index_of(const Elt& e) const {
  if (e.ctx() != &tower_->ambient()) return -1;
  return index_[e.code()];
}

NormOneGroup norm_one_group(const TowerPtr& tc, EnumerationBound bound) {
  const auto& F = tc->ambient();
  require(F.order() <= bound.max_elements, Errc::BoundExceeded,
          "ambient field too large to enumerate");
  NormOneGroup g;
  g.tower_ = tc;
  g.generator_ = F.exp(tc->q() - 1);
  const std::uint64_t size = tc->norm_one_order();
  g.elements_.reserve(size);
  g.index_.assign(F.order(), -1);
  Elt cur = F.one();
  for (std::uint64_t i = 0; i < size; ++i) {
    require(tc->norm(cur).is_one(), Errc::OracleMismatch,
            "norm-one group member with norm != 1");
    require(g.index_[cur.code()] < 0, Errc::OracleMismatch,
            "generator order smaller than expected");
    g.index_[cur.code()] = static_cast<std::int32_t>(i);
    g.elements_.push_back(cur);
    cur *= g.generator_;
  }
  require(cur.is_one(), Errc::OracleMismatch, "generator order mismatch");
  require(g.elements_.size() * (tc->q() - 1) == F.group_order(),
          Errc::OracleMismatch, "|N| (q-1) != q^t - 1");
  return g;
}

NormTable::NormTable(TowerPtr tc, EnumerationBound bound) : tower_(std::move(tc)) {
  const auto& F = tower_->ambient();
  require(F.order() <= bound.max_elements, Errc::BoundExceeded,
          "ambient field too large to tabulate norms");
  norm_.resize(F.order());
  for (std::uint64_t c = 0; c < F.order(); ++c)
    norm_[c] = tower_->norm(F.element(c)).code();
}

Elt NormTable::operator()(const Elt& x) const {
  require(x.ctx() == &tower_->ambient(), Errc::MixedContexts, "foreign element");
  return tower_->ambient().element(norm_[x.code()]);
}

// ---------------------------------------------------------------------------

Poly minimal_polynomial_over_prime_field(const Elt& x) {
  const auto& F = *x.ctx();
  std::vector<Elt> conj{x};
  for (Elt c = x.pow(F.p()); c != x; c = c.pow(F.p())) conj.push_back(c);
  EltPoly m({F.one()});
  for (const auto& c : conj) m = m.times_linear(c);
  const std::uint32_t w0 = F.one().code();
  std::vector<std::uint32_t> coeffs;
  for (const auto& c : m.coeffs()) {
    require(c.code() % w0 == 0, Errc::OracleMismatch,
            "minimal polynomial coefficient outside the prime field");
    coeffs.push_back(c.code() / w0);
  }
  return Poly(F.p(), std::move(coeffs));
}

namespace {

Elt eval_prime_poly(const Poly& f, const Elt& x) {
  const auto& F = *x.ctx();
  Elt acc = F.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;)
    acc = acc * x + F.constant(f.coeff(i));
  return acc;
}

}  // namespace

Embedding::Embedding(FieldPtr small, FieldPtr big)
    : small_(std::move(small)), big_(std::move(big)), minpoly_(small_->p()) {
  require(small_->p() == big_->p() && big_->n() % small_->n() == 0,
          Errc::PreconditionFailed, "small field is not a subfield");
  minpoly_ = minimal_polynomial_over_prime_field(small_->primitive());
  const std::uint64_t ratio = big_->group_order() / small_->group_order();
  const std::uint64_t small_order = small_->group_order();
  for (std::uint64_t s = 1; s <= small_order; ++s) {
    std::uint64_t e = mulmod(ratio, s, big_->group_order());
    Elt beta = big_->exp(e);
    if (eval_prime_poly(minpoly_, beta).is_zero()) {
      log_multiplier_ = e;
      image_of_primitive_ = beta;
      return;
    }
  }
  fail(Errc::NoCompatibleRoot, "no root of the primitive's minimal polynomial");
}

Elt Embedding::operator()(const Elt& x) const {
  require(x.ctx() == small_.get(), Errc::MixedContexts, "foreign element");
  if (x.is_zero()) return big_->zero();
  return image_of_primitive_.pow(small_->discrete_log(x));
}

}  // namespace ngs
