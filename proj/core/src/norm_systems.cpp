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

#include "ngsinger/norm_systems.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ngsinger/error.hpp"

namespace ngs {

namespace {

std::atomic<std::uint64_t> g_calls{0}, g_bounded_calls{0}, g_max_bounded{0};

void require_member_of_group(const TowerCtx& tc, const Elt& A) {
  require(A.ctx() == &tc.ambient(), Errc::MixedContexts, "foreign element");
  require(!A.is_zero() && tc.norm(A).is_one(), Errc::NotNormOne, "A is not in N");
}

void sort_by_log(std::vector<Elt>& v) {
  if (v.empty()) return;
  const auto& F = *v.front().ctx();
  std::sort(v.begin(), v.end(), [&](const Elt& a, const Elt& b) {
    return F.discrete_log(a) < F.discrete_log(b);
  });
}

int h_membership(const TowerCtx& tc, const Elt& x) {
  return (h_eval(tc, 1, x).is_zero() ? 1 : 0) | (h_eval(tc, 2, x).is_zero() ? 2 : 0);
}

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Certificate from A and six solutions, using only tower arithmetic.
SixSolutionCert assemble_cert(const TowerCtx& tc, const Elt& A, std::vector<Elt> sols,
                              std::string method) {
  const auto& F = tc.ambient();
  require(sols.size() == 6, Errc::PreconditionFailed, "expected six solutions");
  SixSolutionCert cert;
  cert.field = tc.ambient_ptr();
  cert.q = tc.q();
  cert.A = A;
  cert.method = std::move(method);
  std::sort(sols.begin(), sols.end(), [&](const Elt& a, const Elt& b) {
    return std::pair(h_membership(tc, a), F.discrete_log(a)) <
           std::pair(h_membership(tc, b), F.discrete_log(b));
  });
  for (const auto& y : sols) cert.membership.push_back(h_membership(tc, y));
  cert.solutions = std::move(sols);
  std::set<Elt> done;
  for (const auto& y : cert.solutions) {
    if (done.count(y)) continue;
    Elt z = A / y;
    done.insert(y);
    done.insert(z);
    if (F.discrete_log(z) < F.discrete_log(y))
      cert.decompositions.emplace_back(z, y);
    else
      cert.decompositions.emplace_back(y, z);
  }
  std::sort(cert.decompositions.begin(), cert.decompositions.end(),
            [&](const auto& a, const auto& b) {
              return F.discrete_log(a.first) < F.discrete_log(b.first);
            });
  return cert;
}

}  // namespace

std::vector<Elt> solve_norm1(const PlanarField& pf) {
  const auto& tc = *pf.tower;
  const Elt one = tc.ambient().one();
  std::vector<Elt> direct;
  for (const auto& y : pf.group.elements())
    if (tc.norm(y + one) == -one) direct.push_back(y);
  auto via_sets = pf.union_sorted();
  require(direct == via_sets, Errc::OracleMismatch,
          "norm-one scan disagrees with H1 u H2");
  return direct;
}

std::vector<Elt> solve_3eq(const PlanarField& pf, const Elt& A) {
  const auto& tc = *pf.tower;
  require_member_of_group(tc, A);
  require(!A.is_one(), Errc::IdentityElement, "A must differ from 1");
  auto U = pf.union_sorted();
  std::unordered_set<Elt> in_union(U.begin(), U.end());
  std::vector<Elt> out;
  for (const auto& y : U)
    if (in_union.count(A / y)) out.push_back(y);
  require(out.size() <= 6, Errc::BoundViolation, "more than six solutions");
  sort_by_log(out);
  return out;
}

std::vector<Elt> triple_norm_scan(const TowerCtx& tc, const Elt& A) {
  const auto& F = tc.ambient();
  const Elt one = F.one(), minus_one = -one;
  std::vector<Elt> out;
  for (std::uint64_t c = 1; c < F.order(); ++c) {
    Elt y = F.element(c);
    if (tc.norm(y).is_one() && tc.norm(y + one) == minus_one && tc.norm(y + A) == minus_one)
      out.push_back(y);
  }
  sort_by_log(out);
  return out;
}

std::vector<Elt> solve_general(const NormTable& norms, const NormSystem& sys) {
  const auto& tc = *norms.tower();
  const auto& F = tc.ambient();
  require(sys.shifts.size() == sys.targets.size(), Errc::PreconditionFailed,
          "shift and target counts differ");
  std::unordered_set<Elt> seen;
  for (const auto& s : sys.shifts) {
    require(s.ctx() == &F, Errc::MixedContexts, "foreign shift");
    require(seen.insert(s).second, Errc::DuplicateShifts, "shifts must be distinct");
  }
  for (const auto& a : sys.targets)
    require(a.ctx() == &F && !a.is_zero() && tc.in_base(a), Errc::InvalidTarget,
            "targets must be nonzero base-field elements");
  std::vector<Elt> out;
  for (std::uint64_t c = 0; c < F.order(); ++c) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < sys.shifts.size(); ++i)
      ok = norms.code(F.add_code(static_cast<std::uint32_t>(c), sys.shifts[i].code())) ==
           sys.targets[i].code();
    if (ok) out.push_back(F.element(c));
  }
  ++g_calls;
  if (sys.shifts.size() >= tc.t()) {
    ++g_bounded_calls;
    std::uint64_t prev = g_max_bounded.load();
    while (prev < out.size() && !g_max_bounded.compare_exchange_weak(prev, out.size())) {
    }
    require(out.size() <= factorial(tc.t()), Errc::BoundViolation,
            "norm system exceeds the t! solution bound");
  }
  return out;
}

std::vector<Elt> solve_general(const TowerCtx& tc, const NormSystem& sys) {
  return solve_general(NormTable(TowerCtx::over(tc.ambient_ptr(), tc.q(), tc.t())), sys);
}

SolveGeneralStats solve_general_stats() {
  return {g_calls.load(), g_bounded_calls.load(), g_max_bounded.load()};
}

void reset_solve_general_stats() {
  g_calls = 0;
  g_bounded_calls = 0;
  g_max_bounded = 0;
}

namespace {

// Coefficient b of the monic quadratic X^2 + b X + A whose roots are the
// H_i-representation factors of A.
Elt quadratic_middle(const TowerCtx& tc, int i, const Elt& A) {
  require(i == 1 || i == 2, Errc::BadIndex, "h index must be 1 or 2");
  require(tc.p() != 2, Errc::EvenCharacteristic, "discriminant test needs odd characteristic");
  require_member_of_group(tc, A);
  const Elt one = tc.ambient().one();
  const Elt Aq = tc.frobenius(A);
  return i == 1 ? A + one - A * Aq : A + one - Aq.inv();
}

}  // namespace

Elt h_rep_discriminant_value(const TowerCtx& tc, int i, const Elt& A) {
  Elt b = quadratic_middle(tc, i, A);
  return b * b - tc.ambient().constant(4) * A;
}

std::optional<std::pair<Elt, Elt>> h_rep_discriminant(const TowerCtx& tc, int i,
                                                      const Elt& A) {
  const auto& F = tc.ambient();
  Elt b = quadratic_middle(tc, i, A);
  Elt disc = b * b - F.constant(4) * A;
  if (disc.is_zero() || !F.is_square(disc)) return std::nullopt;
  Elt G = F.sqrt(disc);
  Elt half = F.constant(2).inv();
  Elt xp = (G - b) * half, xm = (-G - b) * half;
  require(h_eval(tc, i, xp).is_zero() && h_eval(tc, i, xm).is_zero() && xp * xm == A,
          Errc::OracleMismatch, "quadratic roots are not an H_i-representation");
  return std::pair{xp, xm};
}

std::optional<std::pair<Elt, Elt>> h_rep_enumerate(const PlanarField& pf, int i,
                                                   const Elt& A) {
  require(i == 1 || i == 2, Errc::BadIndex, "h index must be 1 or 2");
  const auto& H = i == 1 ? pf.sets.H1 : pf.sets.H2;
  std::optional<std::pair<Elt, Elt>> found;
  for (std::size_t j = 0; j < H.size(); ++j)
    for (std::size_t k = j; k < H.size(); ++k)
      if (H[j] * H[k] == A) {
        require(!found, Errc::MultipleRepresentations, "two H_i-representations");
        found = std::pair{H[j], H[k]};
      }
  return found;
}

std::pair<Elt, Elt> cross_rep_of_member(const PlanarField& pf, int i, const Elt& A) {
  require(i == 1 || i == 2, Errc::BadIndex, "h index must be 1 or 2");
  require(pf.membership(A) & i, Errc::NotAMember, "A is not in H_i");
  const auto& tc = *pf.tower;
  std::pair<Elt, Elt> r{tc.frobenius(A).inv(), tc.frobenius(A, 2).inv()};
  const int other = 3 - i;
  require((pf.membership(r.first) & other) && (pf.membership(r.second) & other) &&
              r.first * r.second == A,
          Errc::OracleMismatch, "cross representation failed");
  return r;
}

void verify_six_solution_cert(const TowerCtx& tc, const SixSolutionCert& cert) {
  auto check = [](bool ok, const std::string& what) {
    require(ok, Errc::VerificationFailed, what);
  };
  const auto& F = tc.ambient();
  check(cert.field.get() == &F, "certificate field differs from the tower");
  check(cert.q == tc.q(), "certificate q differs from the tower");
  check(cert.A.ctx() == &F && !cert.A.is_zero() && tc.norm(cert.A).is_one(), "A not in N");
  check(!cert.A.is_one(), "A = 1");
  check(cert.solutions.size() == 6 && cert.membership.size() == 6, "need six solutions");
  std::set<Elt> sols(cert.solutions.begin(), cert.solutions.end());
  check(sols.size() == 6, "solutions are not distinct");
  const Elt one = F.one(), minus_one = -one;
  for (std::size_t j = 0; j < 6; ++j) {
    const Elt& y = cert.solutions[j];
    check(y.ctx() == &F, "foreign solution");
    check(tc.norm(y).is_one(), "N(Y) != 1");
    check(tc.norm(y + one) == minus_one, "N(Y + 1) != -1");
    check(tc.norm(y + cert.A) == minus_one, "N(Y + A) != -1");
    check(cert.membership[j] != 0 && cert.membership[j] == h_membership(tc, y),
          "membership tag mismatch");
  }
  std::set<Elt> covered;
  for (const auto& [b, c] : cert.decompositions) {
    check(b * c == cert.A, "decomposition does not multiply to A");
    check(sols.count(b) && sols.count(c), "decomposition factor is not a solution");
    covered.insert(b);
    covered.insert(c);
  }
  check(covered == sols, "decompositions do not cover the solutions");
}

SixSolutionCert make_six_solution_cert(const PlanarField& pf, const Elt& A,
                                       std::vector<Elt> solutions, std::string method) {
  auto cert = assemble_cert(*pf.tower, A, std::move(solutions), std::move(method));
  verify_six_solution_cert(*pf.tower, cert);
  return cert;
}

namespace {

std::unordered_map<Elt, std::pair<Elt, Elt>> distinct_products(const std::vector<Elt>& H) {
  std::unordered_map<Elt, std::pair<Elt, Elt>> out;
  for (std::size_t j = 0; j < H.size(); ++j)
    for (std::size_t k = j + 1; k < H.size(); ++k)
      require(out.emplace(H[j] * H[k], std::pair{H[j], H[k]}).second,
              Errc::MultipleRepresentations, "repeated pairwise product");
  return out;
}

SixSolutionCert finish(const PlanarField& pf, const Elt& A, std::vector<Elt> six,
                       std::string method) {
  std::set<Elt> distinct(six.begin(), six.end());
  require(distinct.size() == 6, Errc::OracleMismatch, "constructed solutions not distinct");
  auto solved = solve_3eq(pf, A);
  require(std::set<Elt>(solved.begin(), solved.end()) == distinct, Errc::OracleMismatch,
          "constructed solutions differ from solve_3eq");
  return make_six_solution_cert(pf, A, std::move(six), std::move(method));
}

}  // namespace

SixSolutionCert find_six_char2mod3(const PlanarField& pf) {
  const std::uint64_t q = pf.tower->q();
  require(q % 3 == 2 && q > 2, Errc::PreconditionFailed, "requires q = 2 mod 3, q > 2");
  auto p1 = distinct_products(pf.sets.H1);
  auto p2 = distinct_products(pf.sets.H2);
  const std::size_t expect = (q * q + q) / 2;
  require(p1.size() == expect && p2.size() == expect, Errc::OracleMismatch,
          "|H_i*| != q(q+1)/2");
  for (const auto& A : pf.group.elements()) {
    auto i1 = p1.find(A), i2 = p2.find(A);
    if (i1 == p1.end() || i2 == p2.end()) continue;
    auto mixed = mixed_rep_planar(*pf.tower, A);
    return finish(pf, A,
                  {i1->second.first, i1->second.second, i2->second.first, i2->second.second,
                   mixed.A1, mixed.A2},
                  "char2mod3");
  }
  fail(Errc::OracleMismatch, "H1* and H2* are disjoint");
}

std::vector<Elt> admissible_char3_traces(const PlanarField& pf) {
  const auto& tc = *pf.tower;
  const auto& F = tc.ambient();
  std::set<Elt> traces;
  for (const auto& C : pf.union_sorted())
    if (!C.is_one()) traces.insert(tc.trace(C));
  std::vector<Elt> out;
  for (const auto& tau : tc.base_elements()) {
    if (!traces.count(tau)) continue;
    Elt s = tau * tau + F.one();
    if (!s.is_zero() && F.is_square(s)) out.push_back(tau);
  }
  return out;
}

SixSolutionCert find_six_char3(const PlanarField& pf) {
  const auto& tc = *pf.tower;
  const auto& F = tc.ambient();
  require(tc.p() == 3, Errc::NotChar3, "requires characteristic 3");
  require(tc.q() >= 9, Errc::PreconditionFailed, "requires q >= 9");
  for (const auto& C : pf.union_sorted()) {
    if (C.is_one()) continue;
    Elt tau = tc.trace(C);
    Elt s = tau * tau + F.one();
    if (s.is_zero() || !F.is_square(s)) continue;
    const int i = pf.membership(C);
    require(i == 1 || i == 2, Errc::OracleMismatch, "C in both H1 and H2");
    auto rep = h_rep_discriminant(tc, 3 - i, C * C);
    if (!rep) continue;
    const auto [B, E] = *rep;
    Elt A = C / E;
    auto mixed = mixed_rep_planar(tc, A);
    Elt Ai = i == 1 ? mixed.A1 : mixed.A2;
    Elt Aother = i == 1 ? mixed.A2 : mixed.A1;
    return finish(pf, A, {Ai, C, E.inv(), Aother, C.inv(), B}, "char3");
  }
  fail(Errc::ExhaustedWithoutWitness, "no admissible C found");
}

std::vector<Elt> six_solution_witnesses(const PlanarField& pf) {
  std::vector<Elt> out;
  for (const auto& A : pf.group.elements())
    if (!A.is_one() && solve_3eq(pf, A).size() == 6) out.push_back(A);
  return out;
}

SixSolutionCert find_six_any(const PlanarField& pf) {
  for (const auto& A : pf.group.elements()) {
    if (A.is_one()) continue;
    auto sols = solve_3eq(pf, A);
    if (sols.size() == 6) return make_six_solution_cert(pf, A, std::move(sols), "search");
  }
  fail(Errc::NoWitness, "no A in N \\ {1} has six solutions");
}

SigmaReport sigma_checks(const PlanarField& pf) {
  const auto& tc = *pf.tower;
  const auto& F = tc.ambient();
  SigmaReport r;
  r.sigma_group = F.zero();
  for (const auto& x : pf.group.elements()) r.sigma_group += x;
  r.sigma_group_minus_one = r.sigma_group - F.one();
  r.ok = r.sigma_group.is_zero() && r.sigma_group_minus_one == -F.one();
  r.h_star_products_distinct = true;
  if (tc.q() > 2) {
    auto e2 = [&](const std::vector<Elt>& H) {
      std::unordered_set<Elt> seen;
      Elt s = F.zero();
      for (std::size_t j = 0; j < H.size(); ++j)
        for (std::size_t k = j + 1; k < H.size(); ++k) {
          Elt prod = H[j] * H[k];
          if (!seen.insert(prod).second) r.h_star_products_distinct = false;
          s += prod;
        }
      return s;
    };
    r.sigma_h1_star = e2(pf.sets.H1);
    r.sigma_h2_star = e2(pf.sets.H2);
    r.ok = r.ok && r.sigma_h1_star->is_zero() && r.sigma_h2_star->is_zero() &&
           r.h_star_products_distinct;
  }
  return r;
}

DcReport dC_identities(const PlanarField& pf, const Elt& C) {
  const auto& tc = *pf.tower;
  const auto& F = tc.ambient();
  require(pf.in_union(C), Errc::NotAMember, "C is not in H1 u H2");
  require(!C.is_one(), Errc::IdentityElement, "C = 1");
  auto k = [&](std::int64_t c) { return F.constant(c); };
  const Elt one = F.one();
  const Elt C2 = C * C, C1 = C + one;
  const Elt C1sq = C1 * C1;
  const Elt inner = C2 * C1sq + C1sq - C2;
  const Elt lhs = inner * inner - k(4) * C1sq * C1sq * C2;
  const Elt f1 = C2 + k(3) * C + one, f2 = C2 + C + one, f3 = C2 + C - one,
            f4 = C2 - C - one;
  DcReport r;
  r.tau = tc.trace(C);
  const Elt t = r.tau, t2 = t * t;
  const Elt n1 = -t2 - k(3) * t - one, n2 = t2 + k(3) * t + k(9), n3 = t2 + k(3) * t + one;
  r.quartic_factorization = lhs == f1 * f2 * f3 * f4;
  r.factor_norms = tc.norm(f1) == n1 && tc.norm(f2) == n2 && tc.norm(f3) == n3 &&
                   tc.norm(f4) == n1;
  r.norm_product = tc.norm(lhs) == n1 * n1 * n2 * n3;
  std::string failed;
  if (!r.quartic_factorization) failed += " quartic-factorization";
  if (!r.factor_norms) failed += " factor-norms";
  if (!r.norm_product) failed += " norm-product";
  require(failed.empty(), Errc::IdentityViolated, "D(C) identities failed:" + failed);
  return r;
}

SixSolutionCert squaring_lift(const SixSolutionCert& cert, EnumerationBound bound) {
  const auto& small = cert.field;
  const std::uint32_t p = small->p(), n = small->n();
  std::uint64_t big_order = 1;
  for (std::uint32_t i = 0; i < 2 * n; ++i) {
    big_order *= p;
    require(big_order <= bound.max_elements, Errc::BoundExceeded,
            "lifted field exceeds the enumeration bound");
  }
  auto big = make_extension(p, 2 * n);
  Embedding emb(small, big);
  auto small_tower = TowerCtx::over(small, cert.q, 3);
  auto big_tower = TowerCtx::over(big, cert.q * cert.q, 3);
  auto lift_check = [](bool ok, const std::string& what) {
    require(ok, Errc::LiftVerificationFailed, what);
  };
  std::vector<Elt> sols;
  for (const auto& y : cert.solutions) {
    sols.push_back(emb(y));
    lift_check(emb(small_tower->norm(y)) == big_tower->norm(sols.back()),
               "norm changed under the embedding");
  }
  Elt A = emb(cert.A);
  lift_check(emb(small_tower->norm(cert.A)) == big_tower->norm(A), "norm of A changed");
  try {
    auto lifted = assemble_cert(*big_tower, A, std::move(sols), cert.method + "+lift");
    verify_six_solution_cert(*big_tower, lifted);
    return lifted;
  } catch (const Error& e) {
    fail(Errc::LiftVerificationFailed, e.what());
  }
}

std::int64_t eta_character_sum(const PrimePower& q) {
  require(q.p != 2, Errc::EvenCharacteristic, "quadratic character needs odd q");
  auto F = make_extension(q.p, q.k);
  std::int64_t sum = 0;
  for (std::uint64_t c = 0; c < F->order(); ++c) {
    Elt v = F->element(c).square() + F->one();
    if (!v.is_zero()) sum += F->is_square(v) ? 1 : -1;
  }
  return sum;
}

}  // namespace ngs
