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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ngsinger/budget.hpp"
#include "ngsinger/norm_systems.hpp"
#include "ngsinger/tower.hpp"

namespace ngs {

/// A vertex (A, a) with A in F_{q^{t-1}} and a in F_q*.
struct Vertex {
  Elt A;
  Elt a;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// The projective norm graph NG(q, t): (A, a) ~ (B, b) iff N(A + B) = a b,
/// over the degree t - 1 tower. Loops are allowed.
///
/// Vertex index = code(A) (q - 1) + index of a among the base units.
class NGGraph {
 public:
  /// Throws BoundExceeded when q^{t-1} (q - 1) exceeds the bound.
  NGGraph(TowerPtr tower, EnumerationBound bound = {});

  const TowerPtr& tower() const noexcept { return tower_; }
  std::uint64_t q() const noexcept { return tower_->q(); }
  /// The graph parameter t (one more than the tower degree).
  std::uint32_t t() const noexcept { return tower_->t() + 1; }
  std::size_t size() const noexcept { return size_; }
  const NormTable& norms() const noexcept { return norms_; }

  Vertex vertex(std::size_t i) const;
  /// Throws InvalidTarget for a vertex outside the graph.
  std::size_t index(const Vertex& v) const;

  bool adjacent(std::size_t u, std::size_t v) const;
  bool adjacent(const Vertex& u, const Vertex& v) const;

  /// Builds one adjacency bitset per vertex. Throws BoundExceeded above
  /// max_vertices.
  void materialize(std::size_t max_vertices = 5000);
  bool materialized() const noexcept { return !bits_.empty(); }
  std::size_t words() const noexcept { return words_; }
  /// Adjacency row of u; requires materialize().
  std::span<const std::uint64_t> row(std::size_t u) const;

  /// Neighbors of u in index order (u itself included when it has a loop).
  std::vector<std::size_t> neighbors(std::size_t u) const;

 private:
  TowerPtr tower_;
  NormTable norms_;
  std::size_t units_;
  std::size_t size_;
  std::vector<std::uint32_t> unit_code_;
  std::vector<std::int32_t> unit_index_;  // by code
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// NG(q, t) with the canonical field of order q^{t-1}. Requires t >= 3.
NGGraph ng_build(std::uint64_t q, std::uint32_t t, EnumerationBound bound = {});

struct DegreeReport {
  std::uint64_t expected = 0;  // q^{t-1} - 1
  std::uint64_t min_degree = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t ordered_adjacent_pairs = 0;
  std::uint64_t loops = 0;
  bool ok = false;
};

/// Degrees by the adjacency oracle over all vertex pairs (loops counted).
DegreeReport degree_law(const NGGraph& g);

/// All vertices adjacent to every member of S, in index order. Computed by
/// direct intersection and by the shifted norm system; both must agree.
/// Throws PreconditionFailed (|S| < 2), OracleMismatch.
std::vector<std::size_t> common_neighborhood(const NGGraph& g, std::span<const std::size_t> S);

/// The norm-system route alone.
std::vector<std::size_t> common_neighborhood_by_norms(const NGGraph& g,
                                                      std::span<const std::size_t> S);

/// A K_{|left|,|right|} with all cross pairs adjacent and all vertices distinct.
struct BicliqueCert {
  FieldPtr field;
  std::uint64_t q = 0;
  std::uint32_t t = 4;
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::string method;  // "construction" or "search"
  std::optional<Elt> A, C, D;
};

/// Checks distinctness and every cross adjacency using norms computed
/// from scratch. Throws VerificationFailed.
void verify_biclique(const TowerCtx& tc, const BicliqueCert& cert);

/// The K_{4,6} in NG(q, 4) from a six-solution certificate over the cubic
/// tower tc. Throws MixedContexts, VerificationFailed, NoGoodShift.
BicliqueCert build_k46(const TowerPtr& tc, const SixSolutionCert& cert);

/// Exhaustive pruned search for t_left vertices with at least s common
/// neighbors outside themselves. Requires a materialized graph.
/// Throws PreconditionFailed, BudgetExceeded.
std::optional<BicliqueCert> search_biclique(const NGGraph& g, std::size_t s,
                                            std::size_t t_left = 4,
                                            const Deadline& deadline = {});

struct FreenessReport {
  bool free = true;
  bool exhaustive = true;
  std::uint64_t sets_checked = 0;
  std::uint64_t seed = 0;
  std::size_t max_common = 0;
  std::vector<std::size_t> counterexample;
};

/// No t_size-set has s or more common neighbors. Exhaustive when samples
/// is zero, otherwise that many seeded uniform t_size-sets.
/// Throws PreconditionFailed, BudgetExceeded.
FreenessReport check_ktt_free(const NGGraph& g, std::size_t t_size, std::size_t s,
                              std::uint64_t samples = 0, std::uint64_t seed = 0,
                              const Deadline& deadline = {});

struct K46Count {
  bool exact = false;
  double value = 0;
  double ci_low = 0, ci_high = 0;  // 95% normal interval for estimates
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// Copies of K_{4,6} (left side the 4-set). Exact for q <= 3; otherwise an
/// estimate from seeded random triples, each extended by every fourth
/// vertex. Requires a materialized graph. Throws PreconditionFailed,
/// BudgetExceeded.
K46Count count_k46(const NGGraph& g, std::uint64_t samples = 2000, std::uint64_t seed = 0,
                   const Deadline& deadline = {});

}  // namespace ngs
