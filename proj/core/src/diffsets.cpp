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

#include "ngsinger/diffsets.hpp"

#include <algorithm>
#include <unordered_set>

#include "ngsinger/error.hpp"
#include "ngsinger/linalg.hpp"

namespace ngs {

namespace {

void require_cubic(const TowerCtx& tc) {
  require(tc.t() == 3, Errc::PreconditionFailed, "requires a cubic extension");
}

void require_norm_one_nontrivial(const TowerCtx& tc, const Elt& A) {
  require(A.ctx() == &tc.ambient(), Errc::MixedContexts, "foreign element");
  require(!A.is_zero() && tc.norm(A).is_one(), Errc::NotNormOne, "A is not in N");
  require(!A.is_one(), Errc::IdentityElement, "A = 1 has no mixed representation");
}

}  // namespace

Elt h_eval(const TowerCtx& tc, int i, const Elt& x) {
  require(i == 1 || i == 2, Errc::BadIndex, "h index must be 1 or 2");
  require_cubic(tc);
  Elt xq = tc.frobenius(x);
  Elt one = tc.ambient().one();
  return i == 1 ? xq * x + x + one : xq * x + xq + one;
}

PlanarPair planar_sets(const NormOneGroup& group) {
  const auto& tc = *group.tower();
  require_cubic(tc);
  PlanarPair pp;
  for (const auto& x : group.elements()) {
    if (h_eval(tc, 1, x).is_zero()) pp.H1.push_back(x);
    if (h_eval(tc, 2, x).is_zero()) pp.H2.push_back(x);
  }
  const std::size_t expect = tc.q() + 1;
  require(pp.H1.size() == expect && pp.H2.size() == expect, Errc::OracleMismatch,
          "h_i does not have q + 1 roots in N");
  return pp;
}

std::vector<Elt> planar_roots_full_field(const TowerCtx& tc, int i) {
  std::vector<Elt> roots;
  const auto& F = tc.ambient();
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    Elt x = F.element(c);
    if (h_eval(tc, i, x).is_zero()) roots.push_back(x);
  }
  return roots;
}

int PlanarField::membership(const Elt& x) const {
  if (x.is_zero() || !group.contains(x)) return 0;
  const auto& tc = *tower;
  return (h_eval(tc, 1, x).is_zero() ? 1 : 0) | (h_eval(tc, 2, x).is_zero() ? 2 : 0);
}

std::vector<Elt> PlanarField::union_sorted() const {
  std::vector<Elt> out;
  for (const auto& x : group.elements())
    if (in_union(x)) out.push_back(x);
  return out;
}

PlanarField make_planar_field(TowerPtr tc, EnumerationBound bound) {
  require_cubic(*tc);
  PlanarField pf;
  pf.tower = tc;
  pf.group = norm_one_group(tc, bound);
  pf.sets = planar_sets(pf.group);
  return pf;
}

PlanarField make_planar_field(std::uint64_t q, FieldOptions opts) {
  return make_planar_field(TowerCtx::make(q, 3, opts));
}

MixedRep mixed_rep_planar(const TowerCtx& tc, const Elt& A) {
  require_cubic(tc);
  require_norm_one_nontrivial(tc, A);
  const Elt one = tc.ambient().one();
  const Elt Aq = tc.frobenius(A);
  const Elt Aq1 = Aq * A;
  MixedRep r{(Aq1 - one) / (one - Aq), (A - Aq1) / (Aq1 - one)};
  require(h_eval(tc, 1, r.A1).is_zero() && h_eval(tc, 2, r.A2).is_zero() &&
              r.A1 * r.A2 == A,
          Errc::OracleMismatch, "mixed representation formula failed");
  return r;
}

DiffSetCert verify_difference_set(const NormOneGroup& group, std::span<const Elt> D,
                                  std::uint64_t lambda) {
  require(!D.empty(), Errc::PreconditionFailed, "empty set");
  std::vector<Elt> inv;
  inv.reserve(D.size());
  for (const auto& d : D) {
    require(group.contains(d), Errc::ElementOutsideGroup, "set element outside the group");
    inv.push_back(d.inv());
  }
  DiffSetCert cert;
  cert.group_order = group.size();
  cert.set_size = D.size();
  cert.lambda = lambda;
  cert.counts.assign(group.size(), 0);
  for (const auto& b : D)
    for (const auto& ci : inv) {
      auto idx = group.index_of(b * ci);
      require(idx >= 0, Errc::ElementOutsideGroup, "quotient outside the group");
      ++cert.counts[static_cast<std::size_t>(idx)];
    }
  cert.counts[0] = 0;
  if (group.size() > 1) {
    auto [lo, hi] = std::minmax_element(cert.counts.begin() + 1, cert.counts.end());
    cert.min_count = *lo;
    cert.max_count = *hi;
  }
  const std::uint64_t n = cert.group_order, m = cert.set_size;
  cert.ok = cert.min_count == lambda && cert.max_count == lambda &&
            lambda * (n - 1) == m * (m - 1);
  return cert;
}

SingerParameters singer_parameters(std::uint64_t q, std::uint32_t t) {
  auto geom = [q](std::uint32_t k) {
    std::uint64_t s = 0, pw = 1;
    for (std::uint32_t i = 0; i < k; ++i, pw *= q) s += pw;
    return s;
  };
  return {geom(t), geom(t - 1), geom(t - 2)};
}

std::vector<Elt> singer_trace_zero(const TowerCtx& tc) {
  require(tc.t() >= 3, Errc::PreconditionFailed, "requires t >= 3");
  const auto& F = tc.ambient();
  std::vector<Elt> reps;
  Elt g = F.primitive(), cur = F.one();
  for (std::uint64_t k = 0; k < tc.norm_one_order(); ++k, cur *= g)
    if (tc.trace(cur).is_zero()) reps.push_back(cur);
  return reps;
}

BijectionReport hilbert90_bijection(const TowerCtx& tc, std::span<const Elt> reps,
                                    std::span<const Elt> target) {
  BijectionReport r;
  r.domain_size = reps.size();
  r.target_size = target.size();
  std::unordered_set<Elt> image, tgt(target.begin(), target.end());
  for (const auto& x : reps) {
    Elt y = tc.hilbert90_map(x);
    require(tgt.count(y) == 1, Errc::BijectionFailure, "image outside the target set");
    image.insert(y);
  }
  r.image_size = image.size();
  require(r.image_size == r.domain_size, Errc::BijectionFailure, "map is not injective");
  require(r.image_size == tgt.size(), Errc::BijectionFailure, "map is not surjective");
  return r;
}

BijectionReport equivalence_to_singer(const PlanarField& pf) {
  auto reps = singer_trace_zero(*pf.tower);
  return hilbert90_bijection(*pf.tower, reps, pf.sets.H1);
}

Elt d_t_eval(const TowerCtx& tc, const Elt& x) {
  const std::uint64_t q = tc.q();
  Elt acc = tc.ambient().one() + x;
  Elt conj = x, prod = x;
  for (std::uint32_t j = 1; j + 1 < tc.t(); ++j) {
    conj = conj.pow(q);
    prod *= conj;
    acc += prod;
  }
  return acc;
}

GeneralSinger general_sets(const NormOneGroup& group) {
  const auto& tc = *group.tower();
  require(tc.t() >= 3, Errc::PreconditionFailed, "requires t >= 3");
  GeneralSinger gs;
  for (const auto& x : group.elements())
    if (d_t_eval(tc, x).is_zero()) gs.Dt.push_back(x);
  gs.St = singer_trace_zero(tc);
  hilbert90_bijection(tc, gs.St, gs.Dt);
  return gs;
}

Elt f_tA_eval(const TowerCtx& tc, const Elt& A, const Elt& x) {
  // A^{1 + q + ... + q^{t-2}}
  Elt coef = A, conj = A;
  for (std::uint32_t j = 1; j + 1 < tc.t(); ++j) {
    conj = conj.pow(tc.q());
    coef *= conj;
  }
  return d_t_eval(tc, x) - coef * d_t_eval(tc, x / A);
}

std::vector<std::pair<Elt, Elt>> f_tA_mixed_reps(const TowerCtx& tc, const Elt& A) {
  require(tc.t() >= 3, Errc::PreconditionFailed, "requires t >= 3");
  require_norm_one_nontrivial(tc, A);
  const auto& F = tc.ambient();
  std::vector<std::pair<Elt, Elt>> out;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    Elt b = F.element(c);
    if (!f_tA_eval(tc, A, b).is_zero()) continue;
    Elt cpart = b / A;
    require(!b.is_zero() && tc.norm(b).is_one() && d_t_eval(tc, b).is_zero() &&
                d_t_eval(tc, cpart).is_zero(),
            Errc::OracleMismatch, "root of f_{t,A} outside D_t");
    out.emplace_back(b, cpart);
  }
  return out;
}

std::vector<Elt> trace_zero_basis(const TowerCtx& tc) {
  BaseCoordinates bc(tc);
  const auto& F = tc.ambient();
  // The trace functional in coordinates: Tr(g^i).
  Matrix row(1);
  for (std::uint32_t i = 0; i < tc.t(); ++i) row[0].push_back(tc.trace(F.exp(i)));
  std::vector<Elt> basis;
  for (const auto& v : nullspace(row, tc.t())) basis.push_back(bc.element(v));
  return basis;
}

std::vector<Elt> projective_points(const TowerCtx& tc, std::span<const Elt> basis) {
  const auto& base = tc.base_elements();
  const std::size_t k = basis.size(), q = base.size();
  std::vector<Elt> out;
  std::vector<std::size_t> digit(k, 0);
  while (true) {
    std::size_t lead = 0;
    while (lead < k && digit[lead] == 0) ++lead;
    if (lead < k && digit[lead] == 1) {  // base[1] is 1
      Elt acc = tc.ambient().zero();
      for (std::size_t i = 0; i < k; ++i) acc += base[digit[i]] * basis[i];
      out.push_back(acc);
    }
    std::size_t i = k;
    while (i > 0 && ++digit[i - 1] == q) digit[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Elt> subspace_mixed_reps(const TowerCtx& tc, std::span<const Elt> basis,
                                     const Elt& A) {
  const auto& F = tc.ambient();
  require(A.ctx() == &F, Errc::MixedContexts, "foreign element");
  require(!A.is_zero(), Errc::ZeroElement, "A = 0");
  require(!tc.in_base(A), Errc::IdentityElement, "A lies in F_q^*, the identity coset");
  const std::uint32_t t = tc.t();
  require(basis.size() + 1 == t, Errc::BadBasisDimension, "basis must have t - 1 elements");
  BaseCoordinates bc(tc);
  Matrix L;
  for (const auto& b : basis) L.push_back(bc.coords(b));
  Matrix check = L;
  require(row_reduce(check) == t - 1, Errc::BadBasisDimension,
          "basis elements are linearly dependent");
  // Columns u_1..u_{t-1}, -A u_1..-A u_{t-1}; kernel vectors (alpha, beta).
  Matrix sys(t, std::vector<Elt>(2 * (t - 1), F.zero()));
  for (std::uint32_t j = 0; j + 1 < t; ++j) {
    auto w = bc.coords(A * basis[j]);
    for (std::uint32_t r = 0; r < t; ++r) {
      sys[r][j] = L[j][r];
      sys[r][t - 1 + j] = -w[r];
    }
  }
  Matrix inter;
  for (const auto& v : nullspace(sys, 2 * (t - 1))) {
    std::vector<Elt> x(t, F.zero());
    for (std::uint32_t j = 0; j + 1 < t; ++j)
      for (std::uint32_t r = 0; r < t; ++r) x[r] += v[j] * L[j][r];
    inter.push_back(std::move(x));
  }
  const std::size_t dim = row_reduce(inter);
  require(dim + 2 == t, Errc::OracleMismatch, "intersection does not have dimension t - 2");
  std::vector<Elt> out;
  for (std::size_t r = 0; r < dim; ++r) out.push_back(bc.element(inter[r]));
  return out;
}

EltPoly minimal_poly_from_trace(const PlanarField& pf, const Elt& C) {
  const auto& tc = *pf.tower;
  require(pf.in_union(C), Errc::NotAMember, "C is not in H1 or H2");
  require(!tc.in_base(C), Errc::ElementInBaseField, "C lies in the base field");
  const auto& F = tc.ambient();
  const Elt tau = tc.trace(C);
  const Elt three = F.constant(3);
  EltPoly m({-F.one(), -(tau + three), -tau, F.one()});
  require(m.eval(C).is_zero(), Errc::OracleMismatch, "m_tau does not annihilate C");
  for (const auto& a : tc.base_elements())
    require(!m.eval(a).is_zero(), Errc::OracleMismatch, "m_tau has a root in F_q");
  return m;
}

}  // namespace ngs
