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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ngsinger/certificates.hpp"
#include "ngsinger/error.hpp"
#include "ngsinger/norm_graph.hpp"

namespace {

using namespace ngs;

const Poly kF4096Modulus(2, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1});
const std::vector<std::uint64_t> kPlanarQs{2, 3, 4, 5, 7, 8, 9, 11, 13};

// Collects failed checks for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    std::ostringstream out;
    const auto& list = ok() ? notes_ : failures_;
    for (std::size_t i = 0; i < list.size() && i < 4; ++i) out << (i ? "; " : "") << list[i];
    if (list.size() > 4) out << "; ... (" << list.size() << " total)";
    return out.str();
  }

 private:
  std::vector<std::string> failures_, notes_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
  return {v.begin(), v.end()};
}

std::string qs(std::uint64_t q) { return "q=" + std::to_string(q); }

// 1 ---------------------------------------------------------------------------
void f16_reproduction(Checker& c) {
  auto t0 = Clock::now();
  auto F = make_extension(2, 12, kF4096Modulus);
  auto tc = TowerCtx::over(F, 16, 3);
  auto pf = make_planar_field(tc);
  const Elt U = F->x();
  c.expect(F->multiplicative_order(U) == 4095 && F->primitive() == U, "X is not primitive");
  const Elt A = U.pow(405);
  c.expect(tc->norm(A).is_one() && !A.is_one(), "U^405 not in N \\ {1}");
  auto sols = solve_3eq(pf, A);
  std::set<std::uint64_t> h1, h2;
  for (const auto& y : sols) {
    auto k = F->discrete_log(y);
    if (pf.membership(y) & 1) h1.insert(k);
    if (pf.membership(y) & 2) h2.insert(k);
  }
  c.expect(sols.size() == 6, "solve_3eq returned " + std::to_string(sols.size()) + " solutions");
  c.expect(h1 == std::set<std::uint64_t>{1725, 2775, 3435}, "H1 solutions differ");
  c.expect(h2 == std::set<std::uint64_t>{1065, 2130, 2370}, "H2 solutions differ");
  c.expect(U.pow(1065) * U.pow(3435) == A && U.pow(1725) * U.pow(2775) == A &&
               U.pow(2130) * U.pow(2370) == A,
           "decompositions do not multiply to U^405");
  double s = seconds_since(t0);
  c.expect(s < 5, "runtime " + std::to_string(s) + " s >= 5 s");
  c.note("U^{1725,2775,3435} in H1, U^{1065,2130,2370} in H2");
}

// 2 ---------------------------------------------------------------------------
void difference_sets(Checker& c) {
  auto t0 = Clock::now();
  std::size_t tested = 0;
  for (auto q : kPlanarQs) {
    auto pf = make_planar_field(q);
    auto d = verify_difference_set(pf.group, pf.sets.H1, 1);
    c.expect(d.ok && d.group_order == q * q + q + 1 && d.set_size == q + 1,
             "H1 not a planar difference set at " + qs(q));
    // Brute force: every product of H1 x H2, each A != 1 hit exactly once.
    std::map<Elt, std::vector<std::pair<Elt, Elt>>> reps;
    for (const auto& b : pf.sets.H1)
      for (const auto& e : pf.sets.H2) reps[b * e].emplace_back(b, e);
    for (const auto& A : pf.group.elements()) {
      if (A.is_one()) continue;
      auto it = reps.find(A);
      if (it == reps.end() || it->second.size() != 1) {
        c.expect(false, "mixed representation not unique at " + qs(q));
        continue;
      }
      auto m = mixed_rep_planar(*pf.tower, A);
      c.expect(m.A1 == it->second[0].first && m.A2 == it->second[0].second,
               "formula differs from brute force at " + qs(q));
      ++tested;
    }
  }
  double s = seconds_since(t0);
  c.expect(s < 30, "runtime " + std::to_string(s) + " s >= 30 s");
  c.note(std::to_string(tested) + " mixed representations matched");
}

// 3 ---------------------------------------------------------------------------
void singer_equivalence(Checker& c) {
  for (auto q : kPlanarQs) {
    auto pf = make_planar_field(q);
    auto b = equivalence_to_singer(pf);
    c.expect(b.domain_size == q + 1 && b.image_size == q + 1 && b.target_size == q + 1,
             "bijection sizes wrong at " + qs(q));
  }
  c.note("trace-zero cosets -> H1 bijective for all q");
}

// 4 ---------------------------------------------------------------------------
void six_solution_coverage(Checker& c) {
  auto t0 = Clock::now();
  auto rescan = [&](const TowerCtx& tc, const SixSolutionCert& cert, const std::string& tag) {
    verify_six_solution_cert(tc, cert);
    auto scan = triple_norm_scan(tc, cert.A);
    c.expect(as_set(scan) == as_set(cert.solutions), "full-field scan disagrees for " + tag);
    // The JSON form must re-verify on its own.
    verify_certificate(to_json(cert));
  };
  auto attempt = [&](const std::string& tag, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const Error& e) {
      c.expect(false, tag + ": " + e.what());
    }
  };
  for (std::uint64_t q : {5, 8, 11})
    attempt("char2mod3 " + qs(q), [&] {
      auto pf = make_planar_field(q);
      rescan(*pf.tower, find_six_char2mod3(pf), "char2mod3 " + qs(q));
    });
  for (std::uint64_t q : {9, 27})
    attempt("char3 " + qs(q), [&] {
      auto pf = make_planar_field(q);
      rescan(*pf.tower, find_six_char3(pf), "char3 " + qs(q));
    });
  for (std::uint64_t q : {7, 13, 16})
    attempt("any " + qs(q), [&] {
      auto pf = make_planar_field(q);
      rescan(*pf.tower, find_six_any(pf), "any " + qs(q));
    });
  attempt("lift 5 -> 25", [&] {
    auto pf = make_planar_field(5);
    auto lifted = squaring_lift(find_six_char2mod3(pf));
    c.expect(lifted.q == 25 && lifted.field->p() == 5 && lifted.field->n() == 6,
             "lift is not over F_{5^6}");
    rescan(*TowerCtx::over(lifted.field, 25, 3), lifted, "lift 5 -> 25");
  });
  double s = seconds_since(t0);
  c.expect(s < 600, "runtime " + std::to_string(s) + " s >= 600 s");
  c.note("8 certificates plus the 5 -> 25 lift re-verified by full scan");
}

// 5 ---------------------------------------------------------------------------
SixSolutionCert six_for(const PlanarField& pf) {
  auto q = pf.tower->q();
  if (q % 3 == 2) return find_six_char2mod3(pf);
  if (pf.tower->p() == 3) return find_six_char3(pf);
  return find_six_any(pf);
}

void k46_construction(Checker& c) {
  for (std::uint64_t q : {5, 7, 8, 9, 11, 13, 16}) {
    auto pf = make_planar_field(q);
    auto cert = build_k46(pf.tower, six_for(pf));
    NGGraph g(pf.tower);
    std::set<std::size_t> vertices;
    int edges = 0;
    for (const auto& u : cert.left) {
      vertices.insert(g.index(u));
      for (const auto& v : cert.right) edges += g.adjacent(u, v);
    }
    for (const auto& v : cert.right) vertices.insert(g.index(v));
    c.expect(edges == 24, "only " + std::to_string(edges) + " adjacencies at " + qs(q));
    c.expect(vertices.size() == 10, "vertices not distinct at " + qs(q));
    verify_certificate(to_json(cert));
  }
  c.note("K_{4,6} certified in NG(q,4) for q in {5,7,8,9,11,13,16}");
}

// 6 ---------------------------------------------------------------------------
void negative_results(Checker& c) {
  const double limits[] = {1, 300, 3600};
  std::ostringstream times;
  for (std::uint64_t q : {2, 3, 4}) {
    auto t0 = Clock::now();
    auto g = ng_build(q, 4);
    g.materialize();
    auto found = search_biclique(g, 6, 4, Deadline(limits[q - 2]));
    double s = seconds_since(t0);
    c.expect(!found, "K_{4,6} found in NG(" + std::to_string(q) + ",4)");
    c.expect(s < limits[q - 2], "NG(" + std::to_string(q) + ",4) search too slow");
    times << (q > 2 ? ", " : "") << "NG(" << q << ",4) " << s << " s";
  }
  c.note("absent: " + times.str());
}

// 7 ---------------------------------------------------------------------------
void k47_freeness(Checker& c) {
  for (std::uint64_t q : {2, 3}) {
    auto g = ng_build(q, 4);
    g.materialize();
    auto r = check_ktt_free(g, 4, 7);
    c.expect(r.free && r.exhaustive, "exhaustive check failed at " + qs(q));
  }
  std::size_t worst = 0;
  for (std::uint64_t q : {4, 5}) {
    auto g = ng_build(q, 4);
    g.materialize();
    auto r = check_ktt_free(g, 4, 7, 100000, 20260101 + q);
    c.expect(r.free && r.sets_checked == 100000, "sampled check failed at " + qs(q));
    worst = std::max(worst, r.max_common);
  }
  // The dual-route common neighborhood calls solve_general with three
  // equations in a cubic tower.
  for (std::uint64_t q : {4, 5, 7}) {
    auto g = ng_build(q, 4);
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
    for (int i = 0; i < 3000; ++i) {
      std::set<std::size_t> S;
      while (S.size() < 4) S.insert(pick(rng));
      std::vector<std::size_t> v(S.begin(), S.end());
      c.expect(common_neighborhood(g, v).size() <= 6, "4-set with > 6 common neighbors");
    }
  }
  auto stats = solve_general_stats();
  c.expect(stats.bounded_calls > 0, "no bounded solve_general calls recorded");
  c.expect(stats.max_bounded_solutions <= 6,
           "solve_general returned " + std::to_string(stats.max_bounded_solutions));
  c.note(std::to_string(stats.calls) + " solve_general calls, max " +
         std::to_string(stats.max_bounded_solutions) + " solutions; sampled max common " +
         std::to_string(worst));
}

// 8 ---------------------------------------------------------------------------
void general_singer(Checker& c) {
  for (auto [q, t] : {std::pair{2ull, 4u}, {3ull, 4u}, {4ull, 4u}, {2ull, 5u}, {3ull, 5u}}) {
    const std::string tag = "(q,t)=(" + std::to_string(q) + "," + std::to_string(t) + ")";
    auto tc = TowerCtx::make(q, t);
    const auto& F = tc->ambient();
    auto group = norm_one_group(tc);
    auto gs = general_sets(group);
    auto sp = singer_parameters(q, t);
    auto d = verify_difference_set(group, gs.Dt, sp.lambda);
    c.expect(d.ok && d.group_order == sp.n && d.set_size == sp.m, "D_t parameters at " + tag);

    std::size_t roots = 0;
    for (std::uint64_t k = 0; k < F.order(); ++k) roots += d_t_eval(*tc, F.element(k)).is_zero();
    c.expect(roots == sp.m, "d_t does not split at " + tag);

    auto L = trace_zero_basis(*tc);
    for (const auto& AN : group.elements()) {
      if (AN.is_one()) continue;
      auto reps = f_tA_mixed_reps(*tc, AN);
      if (reps.size() != sp.lambda) {
        c.expect(false, "f_{t,A} root count at " + tag);
        break;
      }
    }
    for (std::uint64_t k = 1; k < tc->norm_one_order(); ++k) {
      Elt AK = F.exp(k);
      auto R = subspace_mixed_reps(*tc, L, AK);
      std::set<Elt> pushed, firsts;
      for (const auto& y : projective_points(*tc, R)) pushed.insert(tc->hilbert90_map(y));
      for (const auto& [b, e] : f_tA_mixed_reps(*tc, tc->hilbert90_map(AK))) firsts.insert(b);
      if (pushed != firsts) {
        c.expect(false, "subspace oracle disagrees at " + tag);
        break;
      }
    }
  }
  c.note("Singer parameters, splitting, f_{t,A} counts and subspace oracle for 5 towers");
}

// 9 ---------------------------------------------------------------------------
void char3_identities(Checker& c) {
  std::size_t checked = 0;
  for (std::uint64_t q : {3, 9, 27}) {
    auto pf = make_planar_field(q);
    std::map<Elt, int> fiber;
    for (const auto& C : pf.union_sorted()) {
      if (C.is_one()) continue;
      auto r = dC_identities(pf, C);
      c.expect(r.quartic_factorization && r.factor_norms && r.norm_product,
               "D(C) identities at " + qs(q));
      auto m = minimal_poly_from_trace(pf, C);
      c.expect(m.eval(C).is_zero(), "m_tau(C) != 0 at " + qs(q));
      ++fiber[pf.tower->trace(C)];
      ++checked;
    }
    for (auto [tau, n] : fiber) c.expect(n == 3, "trace fiber size != 3 at " + qs(q));
    c.expect(fiber.size() * 3 == 2 * q, "trace image size at " + qs(q));
    c.expect(eta_character_sum(PrimePower::from_q(q)) == -1, "eta sum at " + qs(q));
  }
  c.note(std::to_string(checked) + " elements C checked; eta = -1 at q = 3, 9, 27");
}

// 10 --------------------------------------------------------------------------
void structural_invariants(Checker& c) {
  for (std::uint64_t q : {5, 8, 11}) {
    auto pf = make_planar_field(q);
    auto s = sigma_checks(pf);
    const Elt minus_one = -pf.tower->ambient().one();
    c.expect(s.sigma_group_minus_one == minus_one, "sigma(N \\ {1}) != -1 at " + qs(q));
    c.expect(s.sigma_h1_star && s.sigma_h1_star->is_zero() && s.sigma_h2_star &&
                 s.sigma_h2_star->is_zero(),
             "sigma(H_i*) != 0 at " + qs(q));
  }
  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto g = ng_build(q, 4);
    auto d = degree_law(g);
    c.expect(d.ok && d.expected == q * q * q - 1, "degree law at " + qs(q));
    if (q % 2 == 0) c.expect(d.loops == 0, "loop in characteristic 2 at " + qs(q));
  }
  c.expect(degree_law(ng_build(8, 4)).loops == 0, "loop in NG(8,4)");
  c.note("sigma sums, degree law q^3 - 1, no loops for q = 2, 4, 8");
}

}  // namespace

int main() {
  reset_solve_general_stats();
  struct Criterion {
    const char* name;
    void (*run)(Checker&);
  };
  const Criterion criteria[] = {
      {"F16 reproduction", f16_reproduction},
      {"difference-set certification", difference_sets},
      {"Singer equivalence", singer_equivalence},
      {"six-solution coverage", six_solution_coverage},
      {"K4,6 construction", k46_construction},
      {"negative results", negative_results},
      {"K4,7-freeness", k47_freeness},
      {"general Singer machinery", general_singer},
      {"characteristic-3 identities", char3_identities},
      {"structural invariants", structural_invariants},
  };
  int failed = 0, n = 0;
  for (const auto& cr : criteria) {
    ++n;
    Checker c;
    auto t0 = Clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const bool ok = c.ok();
    failed += !ok;
    std::printf("CRITERION %2d %-30s %s (%.2f s) %s\n", n, cr.name, ok ? "PASS" : "FAIL",
                seconds_since(t0), c.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed ? 1 : 0;
}
