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
#include <span>
#include <utility>
#include <vector>

#include "ngsinger/tower.hpp"

namespace ngs {

/// h_1(X) = X^{q+1} + X + 1 (i = 1) or h_2(X) = X^{q+1} + X^q + 1 (i = 2).
/// Requires a cubic tower. Throws BadIndex, PreconditionFailed.
Elt h_eval(const TowerCtx& tc, int i, const Elt& x);

/// Root sets of h_1 and h_2 in a cubic tower, listed in the order of the
/// norm-one group.
struct PlanarPair {
  std::vector<Elt> H1, H2;
};

PlanarPair planar_sets(const NormOneGroup& group);

/// Roots of h_i found by scanning the whole ambient field (oracle path).
std::vector<Elt> planar_roots_full_field(const TowerCtx& tc, int i);

/// Everything the cubic-tower computations share: the tower, its norm-one
/// group and both difference sets.
struct PlanarField {
  TowerPtr tower;
  NormOneGroup group;
  PlanarPair sets;

  /// Bit 1: member of H1, bit 2: member of H2.
  int membership(const Elt& x) const;
  bool in_union(const Elt& x) const { return membership(x) != 0; }
  /// H1 followed by the members of H2 not already in H1, in group order.
  std::vector<Elt> union_sorted() const;
};

PlanarField make_planar_field(TowerPtr tc, EnumerationBound bound = {});
PlanarField make_planar_field(std::uint64_t q, FieldOptions opts = {});

struct MixedRep {
  Elt A1;  // in H1
  Elt A2;  // in H2
};

/// The factorization A = A1 A2 with A1 in H1, A2 in H2, from the closed
/// formulas. Throws IdentityElement, NotNormOne.
MixedRep mixed_rep_planar(const TowerCtx& tc, const Elt& A);

/// Count table of the quotients B C^{-1}, B, C in D, indexed by group
/// position (index 0, the identity, is left at 0).
struct DiffSetCert {
  std::uint64_t group_order = 0;
  std::uint64_t set_size = 0;
  std::uint64_t lambda = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
  /// All counts equal lambda and lambda (n - 1) = m (m - 1).
  bool ok = false;
};

/// Throws ElementOutsideGroup, PreconditionFailed (empty set).
DiffSetCert verify_difference_set(const NormOneGroup& group, std::span<const Elt> D,
                                  std::uint64_t lambda);

/// Singer parameters (n, m, lambda) of F_{q^t}.
struct SingerParameters {
  std::uint64_t n, m, lambda;
};
SingerParameters singer_parameters(std::uint64_t q, std::uint32_t t);

/// One representative per F_q^*-coset of the nonzero trace-zero elements:
/// the g^k with 0 <= k < |N| and trace 0, in increasing k.
std::vector<Elt> singer_trace_zero(const TowerCtx& tc);

struct BijectionReport {
  std::size_t domain_size = 0;
  std::size_t image_size = 0;
  std::size_t target_size = 0;
};

/// Checks that x -> x^{q-1} maps the trace-zero representatives bijectively
/// onto `target`. Throws BijectionFailure.
BijectionReport hilbert90_bijection(const TowerCtx& tc, std::span<const Elt> reps,
                                    std::span<const Elt> target);
/// The cubic case against H1.
BijectionReport equivalence_to_singer(const PlanarField& pf);

/// d_t(Y) = 1 + Y + Y^{1+q} + ... + Y^{1+q+...+q^{t-2}}.
Elt d_t_eval(const TowerCtx& tc, const Elt& x);

struct GeneralSinger {
  std::vector<Elt> Dt;  // roots of d_t, group order
  std::vector<Elt> St;  // trace-zero coset representatives
};

/// Throws PreconditionFailed (t < 3), BijectionFailure.
GeneralSinger general_sets(const NormOneGroup& group);

/// f_{t,A}(X) = d_t(X) - A^{1+q+...+q^{t-2}} d_t(X/A).
Elt f_tA_eval(const TowerCtx& tc, const Elt& A, const Elt& x);

/// Pairs (B, B/A) over the roots B of f_{t,A} in the ambient field, in
/// enumeration order. Throws IdentityElement, NotNormOne.
std::vector<std::pair<Elt, Elt>> f_tA_mixed_reps(const TowerCtx& tc, const Elt& A);

/// Basis of the F_q-subspace L intersected with A L, in reduced echelon
/// form over the basis 1, g, ..., g^{t-1}. L must have dimension t - 1.
/// Throws BadBasisDimension, IdentityElement (A in F_q^*), ZeroElement.
std::vector<Elt> subspace_mixed_reps(const TowerCtx& tc, std::span<const Elt> basis,
                                     const Elt& A);

/// A basis of the trace-zero hyperplane.
std::vector<Elt> trace_zero_basis(const TowerCtx& tc);

/// Nonzero elements of the F_q-span of `basis`, one per F_q^*-coset.
std::vector<Elt> projective_points(const TowerCtx& tc, std::span<const Elt> basis);

/// X^3 - tau X^2 - (tau + 3) X - 1 with tau = Tr(C), ascending coefficients
/// in F_q. Asserts that it annihilates C and has no root in F_q.
/// Throws ElementInBaseField, NotAMember, OracleMismatch.
EltPoly minimal_poly_from_trace(const PlanarField& pf, const Elt& C);

}  // namespace ngs
