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
#include <string>
#include <utility>
#include <vector>

#include "ngsinger/diffsets.hpp"

namespace ngs {

/// {Y : N(Y) = 1, N(Y + 1) = -1}, computed by scanning N and compared
/// against H1 u H2. Group order. Throws OracleMismatch.
std::vector<Elt> solve_norm1(const PlanarField& pf);

/// {Y in H1 u H2 : A/Y in H1 u H2}, i.e. the solutions of
/// N(X) = 1, N(X + 1) = -1, N(X + A) = -1. Sorted by discrete log.
/// Throws IdentityElement, NotNormOne, BoundViolation (more than six).
std::vector<Elt> solve_3eq(const PlanarField& pf, const Elt& A);

/// The same system by scanning every element of the ambient field.
std::vector<Elt> triple_norm_scan(const TowerCtx& tc, const Elt& A);

/// N(X + shift_i) = target_i for all i.
struct NormSystem {
  std::vector<Elt> shifts;
  std::vector<Elt> targets;  // nonzero base-field elements
};

/// All solutions in the ambient field, in enumeration order. When the
/// system has at least t equations the count is asserted to be at most t!.
/// Throws DuplicateShifts, InvalidTarget, BoundViolation.
std::vector<Elt> solve_general(const NormTable& norms, const NormSystem& sys);
std::vector<Elt> solve_general(const TowerCtx& tc, const NormSystem& sys);

/// Process-wide record of solve_general calls.
struct SolveGeneralStats {
  std::uint64_t calls = 0;
  std::uint64_t bounded_calls = 0;  // calls with >= t equations
  std::uint64_t max_bounded_solutions = 0;
};
SolveGeneralStats solve_general_stats();
void reset_solve_general_stats();

/// H_i-representation of A with distinct factors from the quadratic whose
/// roots are Y and A/Y. Absent when the discriminant is zero or a
/// non-square. Odd characteristic only. Throws EvenCharacteristic,
/// NotNormOne, BadIndex.
std::optional<std::pair<Elt, Elt>> h_rep_discriminant(const TowerCtx& tc, int i,
                                                      const Elt& A);

/// The discriminant used by h_rep_discriminant (before the square test).
Elt h_rep_discriminant_value(const TowerCtx& tc, int i, const Elt& A);

/// The H_i-representation of A by scanning pairs of H_i (possibly equal
/// factors), smaller group index first. Throws MultipleRepresentations.
std::optional<std::pair<Elt, Elt>> h_rep_enumerate(const PlanarField& pf, int i,
                                                   const Elt& A);

/// For A in H_i: (1/A^q, 1/A^{q^2}), an H_{3-i}-representation of A.
/// Throws NotAMember, OracleMismatch.
std::pair<Elt, Elt> cross_rep_of_member(const PlanarField& pf, int i, const Elt& A);

/// Six distinct solutions of the (3eq) system for a parameter A.
struct SixSolutionCert {
  FieldPtr field;
  std::uint64_t q = 0;
  Elt A;
  std::vector<Elt> solutions;               // sorted by (membership, discrete log)
  std::vector<int> membership;              // 1 = H1, 2 = H2, 3 = both
  std::vector<std::pair<Elt, Elt>> decompositions;  // B C = A
  std::string method;
};

/// Re-checks a certificate using only norms and h_i evaluations.
/// Throws VerificationFailed.
void verify_six_solution_cert(const TowerCtx& tc, const SixSolutionCert& cert);

/// Assembles a certificate from A and its solution set (must have size 6).
SixSolutionCert make_six_solution_cert(const PlanarField& pf, const Elt& A,
                                       std::vector<Elt> solutions, std::string method);

/// q = 2 mod 3, q > 2: the least-discrete-log element of H1* n H2*.
/// Throws PreconditionFailed, OracleMismatch.
SixSolutionCert find_six_char2mod3(const PlanarField& pf);

/// Characteristic 3, q >= 9: C^2 = B E route. Throws NotChar3,
/// PreconditionFailed, ExhaustedWithoutWitness.
SixSolutionCert find_six_char3(const PlanarField& pf);

/// The traces tau of C in H1 u H2 \ {1} for which tau^2 + 1 is a nonzero
/// square in F_q, in base-field order.
std::vector<Elt> admissible_char3_traces(const PlanarField& pf);

/// First A in N \ {1} (discrete-log order) whose (3eq) system has six
/// solutions. Throws NoWitness.
SixSolutionCert find_six_any(const PlanarField& pf);

/// All A in N \ {1} with six solutions, in discrete-log order.
std::vector<Elt> six_solution_witnesses(const PlanarField& pf);

struct SigmaReport {
  Elt sigma_group;              // sum of N
  Elt sigma_group_minus_one;    // sum of N \ {1}
  std::optional<Elt> sigma_h1_star, sigma_h2_star;  // absent for q = 2
  bool h_star_products_distinct = false;
  bool ok = false;
};

SigmaReport sigma_checks(const PlanarField& pf);

struct DcReport {
  Elt tau;
  bool quartic_factorization = false;
  bool factor_norms = false;
  bool norm_product = false;
};

/// Checks the D(C) identities for C in H1 u H2 \ {1}. Throws NotAMember,
/// IdentityViolated (naming the failed identity).
DcReport dC_identities(const PlanarField& pf, const Elt& C);

/// Re-embeds a certificate over F_{q^3} into F_{q^6} and re-verifies it for
/// the base field F_{q^2}. Throws BoundExceeded, LiftVerificationFailed.
SixSolutionCert squaring_lift(const SixSolutionCert& cert, EnumerationBound bound = {});

/// sum over y in F_q of eta(y^2 + 1), eta the quadratic character.
/// Throws EvenCharacteristic.
std::int64_t eta_character_sum(const PrimePower& q);

}  // namespace ngs
