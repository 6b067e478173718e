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

#include "ngsinger/norm_graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "ngsinger/error.hpp"

namespace ngs {

namespace {

bool test_bit(std::span<const std::uint64_t> w, std::size_t i) {
  return (w[i >> 6] >> (i & 63)) & 1;
}

std::size_t popcount(std::span<const std::uint64_t> w) {
  std::size_t n = 0;
  for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
  return n;
}

std::vector<std::size_t> bits_to_indices(std::span<const std::uint64_t> w) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (std::uint64_t x = w[k]; x; x &= x - 1)
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  return out;
}

// |cur| minus the members of L that lie in cur.
std::size_t count_outside(std::span<const std::uint64_t> cur, std::span<const std::size_t> L) {
  std::size_t n = popcount(cur);
  for (auto x : L) n -= test_bit(cur, x);
  return n;
}

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

std::uint64_t binom_u(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Depth-first enumeration of increasing index tuples of length k with the
// running intersection of adjacency rows. Branches whose intersection has
// fewer than prune_below vertices are cut. leaf(L, cur) returns true to stop.
class TupleWalker {
 public:
  TupleWalker(const NGGraph& g, std::size_t k, std::size_t prune_below, const Deadline& d)
      : g_(g), k_(k), prune_(prune_below), deadline_(d),
        level_(k + 1, std::vector<std::uint64_t>(g.words())) {
    require(g.materialized(), Errc::PreconditionFailed, "graph is not materialized");
    require(k >= 1, Errc::PreconditionFailed, "tuple size must be positive");
  }

  template <class Leaf>
  bool run(Leaf&& leaf) {
    L_.clear();
    return step(0, 0, leaf);
  }

 private:
  template <class Leaf>
  bool step(std::size_t depth, std::size_t start, Leaf& leaf) {
    const std::size_t n = g_.size();
    for (std::size_t v = start; v + (k_ - depth) <= n; ++v) {
      if ((++visits_ & 0xfff) == 0) deadline_.check("biclique search budget exhausted");
      auto row = g_.row(v);
      auto& cur = level_[depth + 1];
      if (depth == 0) {
        std::copy(row.begin(), row.end(), cur.begin());
      } else {
        const auto& prev = level_[depth];
        for (std::size_t w = 0; w < cur.size(); ++w) cur[w] = prev[w] & row[w];
      }
      if (prune_ && popcount(cur) < prune_) continue;
      L_.push_back(v);
      bool stop = depth + 1 == k_ ? leaf(std::span<const std::size_t>(L_),
                                         std::span<const std::uint64_t>(cur))
                                  : step(depth + 1, v + 1, leaf);
      L_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const NGGraph& g_;
  std::size_t k_, prune_;
  const Deadline& deadline_;
  std::vector<std::vector<std::uint64_t>> level_;
  std::vector<std::size_t> L_;
  std::uint64_t visits_ = 0;
};

// A uniform k-subset of [0, n), sorted.
std::vector<std::size_t> random_subset(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> out;
  while (out.size() < k) {
    auto v = pick(rng);
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void intersect_rows(const NGGraph& g, std::span<const std::size_t> S,
                    std::vector<std::uint64_t>& cur) {
  auto first = g.row(S[0]);
  cur.assign(first.begin(), first.end());
  for (std::size_t i = 1; i < S.size(); ++i) {
    auto r = g.row(S[i]);
    for (std::size_t w = 0; w < cur.size(); ++w) cur[w] &= r[w];
  }
}

}  // namespace

NGGraph::NGGraph(TowerPtr tower, EnumerationBound bound)
    : tower_(std::move(tower)), norms_(tower_, bound), units_(tower_->q() - 1) {
  const auto& F = tower_->ambient();
  require(F.order() <= bound.max_elements / units_, Errc::BoundExceeded,
          "norm graph has too many vertices");
  size_ = F.order() * units_;
  unit_index_.assign(F.order(), -1);
  for (std::size_t i = 0; i < units_; ++i) {
    const Elt& a = tower_->base_elements()[i + 1];
    unit_code_.push_back(a.code());
    unit_index_[a.code()] = static_cast<std::int32_t>(i);
  }
}

Vertex NGGraph::vertex(std::size_t i) const {
  require(i < size_, Errc::InvalidTarget, "vertex index out of range");
  const auto& F = tower_->ambient();
  return {F.element(i / units_), F.element(unit_code_[i % units_])};
}

std::size_t NGGraph::index(const Vertex& v) const {
  const auto& F = tower_->ambient();
  require(v.A.ctx() == &F && v.a.ctx() == &F, Errc::MixedContexts, "foreign vertex");
  auto u = unit_index_[v.a.code()];
  require(u >= 0, Errc::InvalidTarget, "second component is not a base-field unit");
  return v.A.code() * units_ + static_cast<std::size_t>(u);
}

bool NGGraph::adjacent(std::size_t u, std::size_t v) const {
  require(u < size_ && v < size_, Errc::InvalidTarget, "vertex index out of range");
  const auto& F = tower_->ambient();
  auto Au = static_cast<std::uint32_t>(u / units_), Av = static_cast<std::uint32_t>(v / units_);
  return norms_.code(F.add_code(Au, Av)) ==
         F.mul_code(unit_code_[u % units_], unit_code_[v % units_]);
}

bool NGGraph::adjacent(const Vertex& u, const Vertex& v) const {
  return adjacent(index(u), index(v));
}

void NGGraph::materialize(std::size_t max_vertices) {
  if (materialized()) return;
  require(size_ <= max_vertices, Errc::BoundExceeded, "graph too large to materialize");
  const auto& F = tower_->ambient();
  words_ = (size_ + 63) / 64;
  bits_.assign(size_ * words_, 0);
  // Each (A, a) has exactly one neighbor (B, N(A+B)/a) for every B != -A.
  for (std::size_t u = 0; u < size_; ++u) {
    auto A = static_cast<std::uint32_t>(u / units_);
    auto inv_a = F.inv_code(unit_code_[u % units_]);
    auto* row = &bits_[u * words_];
    for (std::uint32_t B = 0; B < F.order(); ++B) {
      auto n = norms_.code(F.add_code(A, B));
      if (n == 0) continue;
      std::size_t v = B * units_ + static_cast<std::size_t>(unit_index_[F.mul_code(n, inv_a)]);
      row[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
}

std::span<const std::uint64_t> NGGraph::row(std::size_t u) const {
  require(materialized(), Errc::PreconditionFailed, "graph is not materialized");
  return {&bits_[u * words_], words_};
}

std::vector<std::size_t> NGGraph::neighbors(std::size_t u) const {
  if (materialized()) return bits_to_indices(row(u));
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < size_; ++v)
    if (adjacent(u, v)) out.push_back(v);
  return out;
}

NGGraph ng_build(std::uint64_t q, std::uint32_t t, EnumerationBound bound) {
  require(t >= 3, Errc::PreconditionFailed, "NG(q, t) needs t >= 3");
  auto pp = PrimePower::from_q(q);
  std::uint64_t n = q - 1;
  for (std::uint32_t i = 0; i + 1 < t; ++i) {
    require(n <= bound.max_elements / q, Errc::BoundExceeded,
            "norm graph has too many vertices");
    n *= q;
  }
  return NGGraph(TowerCtx::make(pp.q, t - 1), bound);
}

DegreeReport degree_law(const NGGraph& g) {
  DegreeReport r;
  r.expected = g.tower()->ambient().order() - 1;
  r.min_degree = UINT64_MAX;
  for (std::size_t u = 0; u < g.size(); ++u) {
    std::uint64_t d = 0;
    for (std::size_t v = 0; v < g.size(); ++v) d += g.adjacent(u, v);
    r.loops += g.adjacent(u, u);
    r.ordered_adjacent_pairs += d;
    r.min_degree = std::min(r.min_degree, d);
    r.max_degree = std::max(r.max_degree, d);
  }
  r.ok = r.min_degree == r.expected && r.max_degree == r.expected;
  return r;
}

std::vector<std::size_t> common_neighborhood_by_norms(const NGGraph& g,
                                                      std::span<const std::size_t> S) {
  require(S.size() >= 2, Errc::PreconditionFailed, "need at least two vertices");
  std::vector<Vertex> vs;
  std::set<Elt> firsts;
  for (auto i : S) {
    vs.push_back(g.vertex(i));
    firsts.insert(vs.back().A);
  }
  if (firsts.size() != vs.size()) return {};
  const auto& [Bl, bl] = vs.back();
  // Z = 1/(X + B_l): N(Z + A_i) = (b_i / b_l) N(A_i), A_i = 1/(B_i - B_l).
  NormSystem sys;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    Elt Ai = (vs[i].A - Bl).inv();
    sys.shifts.push_back(Ai);
    sys.targets.push_back(vs[i].a / bl * g.norms()(Ai));
  }
  std::vector<std::size_t> out;
  for (const auto& Z : solve_general(g.norms(), sys)) {
    if (Z.is_zero()) continue;
    out.push_back(g.index({Z.inv() - Bl, (bl * g.norms()(Z)).inv()}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> common_neighborhood(const NGGraph& g, std::span<const std::size_t> S) {
  require(S.size() >= 2, Errc::PreconditionFailed, "need at least two vertices");
  std::vector<std::size_t> direct;
  if (g.materialized()) {
    std::vector<std::uint64_t> cur;
    intersect_rows(g, S, cur);
    direct = bits_to_indices(cur);
  } else {
    for (std::size_t v = 0; v < g.size(); ++v)
      if (std::all_of(S.begin(), S.end(), [&](std::size_t u) { return g.adjacent(u, v); }))
        direct.push_back(v);
  }
  require(direct == common_neighborhood_by_norms(g, S), Errc::OracleMismatch,
          "common neighborhood routes disagree");
  return direct;
}

void verify_biclique(const TowerCtx& tc, const BicliqueCert& cert) {
  auto check = [](bool ok, const std::string& what) {
    require(ok, Errc::VerificationFailed, what);
  };
  const auto& F = tc.ambient();
  check(cert.field.get() == &F, "certificate field differs from the tower");
  check(cert.q == tc.q() && cert.t == tc.t() + 1, "certificate parameters differ");
  check(!cert.left.empty() && !cert.right.empty(), "empty side");
  std::set<std::pair<Elt, Elt>> seen;
  auto vet = [&](const Vertex& v) {
    check(v.A.ctx() == &F && v.a.ctx() == &F, "foreign vertex");
    check(!v.a.is_zero() && tc.in_base(v.a), "second component not in F_q*");
    check(seen.emplace(v.A, v.a).second, "repeated vertex");
  };
  for (const auto& v : cert.left) vet(v);
  for (const auto& v : cert.right) vet(v);
  for (const auto& u : cert.left)
    for (const auto& v : cert.right) check(tc.norm(u.A + v.A) == u.a * v.a, "missing adjacency");
}

BicliqueCert build_k46(const TowerPtr& tc, const SixSolutionCert& cert) {
  const auto& F = tc->ambient();
  require(cert.field.get() == &F, Errc::MixedContexts, "certificate over another field");
  require(tc->t() == 3, Errc::PreconditionFailed, "K_{4,6} construction needs a cubic tower");
  verify_six_solution_cert(*tc, cert);
  const Elt one = F.one(), A = cert.A;

  std::optional<Elt> C;
  for (std::uint64_t k = 0; k < F.group_order() && !C; ++k) {
    Elt c = F.exp(k);
    if (c != -one && c != -A && !tc->norm(c).is_one()) C = c;
  }
  require(C.has_value(), Errc::OracleMismatch, "no admissible C");

  BicliqueCert out;
  out.field = tc->ambient_ptr();
  out.q = tc->q();
  out.t = 4;
  out.method = "construction";
  out.A = A;
  out.C = *C;
  const Elt shifts[3] = {*C, *C + one, *C + A};
  const Elt signs[3] = {one, -one, -one};
  for (int i = 0; i < 3; ++i)
    out.left.push_back({shifts[i].inv(), signs[i] / tc->norm(shifts[i])});
  out.left.push_back({F.zero(), one});
  for (const auto& x : cert.solutions) {
    Elt y = x - *C;
    out.right.push_back({y.inv(), tc->norm(y).inv()});
  }

  if (F.p() != 2) {
    // (B + D, b) = (R - D, r) exactly when D = (R - B)/2.
    std::set<Elt> bad;
    Elt half = F.constant(2).inv();
    for (const auto& l : out.left)
      for (const auto& r : out.right) bad.insert((r.A - l.A) * half);
    std::optional<Elt> D;
    for (std::uint64_t c = 0; c < F.order() && !D; ++c)
      if (!bad.count(F.element(c))) D = F.element(c);
    require(D.has_value(), Errc::NoGoodShift, "every shift collides");
    for (auto& l : out.left) l.A += *D;
    for (auto& r : out.right) r.A -= *D;
    out.D = *D;
  }
  verify_biclique(*tc, out);
  return out;
}

std::optional<BicliqueCert> search_biclique(const NGGraph& g, std::size_t s, std::size_t t_left,
                                            const Deadline& deadline) {
  require(s >= 1, Errc::PreconditionFailed, "s must be positive");
  TupleWalker walker(g, t_left, s, deadline);
  std::optional<BicliqueCert> found;
  walker.run([&](std::span<const std::size_t> L, std::span<const std::uint64_t> cur) {
    if (count_outside(cur, L) < s) return false;
    BicliqueCert c;
    c.field = g.tower()->ambient_ptr();
    c.q = g.q();
    c.t = g.t();
    c.method = "search";
    for (auto u : L) c.left.push_back(g.vertex(u));
    for (auto v : bits_to_indices(cur)) {
      if (c.right.size() == s) break;
      if (std::find(L.begin(), L.end(), v) == L.end()) c.right.push_back(g.vertex(v));
    }
    verify_biclique(*g.tower(), c);
    found = std::move(c);
    return true;
  });
  return found;
}

FreenessReport check_ktt_free(const NGGraph& g, std::size_t t_size, std::size_t s,
                              std::uint64_t samples, std::uint64_t seed,
                              const Deadline& deadline) {
  require(t_size >= 1 && t_size <= g.size(), Errc::PreconditionFailed, "bad set size");
  FreenessReport r;
  r.seed = seed;
  auto record = [&](std::span<const std::size_t> L, std::size_t common) {
    ++r.sets_checked;
    r.max_common = std::max(r.max_common, common);
    if (common >= s && r.free) {
      r.free = false;
      r.counterexample.assign(L.begin(), L.end());
    }
  };
  if (samples == 0) {
    TupleWalker walker(g, t_size, 0, deadline);
    walker.run([&](std::span<const std::size_t> L, std::span<const std::uint64_t> cur) {
      record(L, popcount(cur));
      return false;
    });
    return r;
  }
  r.exhaustive = false;
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> cur;
  for (std::uint64_t i = 0; i < samples; ++i) {
    if ((i & 0x3ff) == 0) deadline.check("freeness sampling budget exhausted");
    auto L = random_subset(rng, g.size(), t_size);
    if (g.materialized()) {
      intersect_rows(g, L, cur);
      record(L, popcount(cur));
    } else {
      record(L, common_neighborhood(g, L).size());
    }
  }
  return r;
}

K46Count count_k46(const NGGraph& g, std::uint64_t samples, std::uint64_t seed,
                   const Deadline& deadline) {
  K46Count out;
  out.seed = seed;
  if (g.q() <= 3) {
    std::uint64_t total = 0;
    TupleWalker walker(g, 4, 6, deadline);
    walker.run([&](std::span<const std::size_t> L, std::span<const std::uint64_t> cur) {
      total += binom_u(count_outside(cur, L), 6);
      return false;
    });
    out.exact = true;
    out.value = out.ci_low = out.ci_high = static_cast<double>(total);
    return out;
  }
  require(g.materialized(), Errc::PreconditionFailed, "graph is not materialized");
  require(samples >= 2, Errc::PreconditionFailed, "need at least two samples");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> tri, cur(g.words());
  double sum = 0, sum_sq = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    deadline.check("K_{4,6} sampling budget exhausted");
    auto T = random_subset(rng, g.size(), 3);
    intersect_rows(g, T, tri);
    double x = 0;
    if (popcount(tri) >= 6) {
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (std::find(T.begin(), T.end(), v) != T.end()) continue;
        auto r = g.row(v);
        for (std::size_t w = 0; w < cur.size(); ++w) cur[w] = tri[w] & r[w];
        std::size_t L[4] = {T[0], T[1], T[2], v};
        x += binom(count_outside(cur, L), 6);
      }
    }
    sum += x;
    sum_sq += x * x;
  }
  const double m = static_cast<double>(samples);
  const double mean = sum / m;
  const double var = std::max(0.0, (sum_sq - m * mean * mean) / (m - 1));
  // Each 4-set arises from four of its triples.
  const double scale = binom(g.size(), 3) / 4;
  const double half = 1.96 * std::sqrt(var / m) * scale;
  out.samples = samples;
  out.value = mean * scale;
  out.ci_low = std::max(0.0, out.value - half);
  out.ci_high = out.value + half;
  return out;
}

}  // namespace ngs
