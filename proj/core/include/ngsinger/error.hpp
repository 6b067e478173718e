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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ngs {

/// Machine-readable failure reasons. The names are stable: they appear in
/// CLI output and certificates.
enum class Errc {
  NonPrime,
  ReduciblePoly,
  DegreeMismatch,
  DivisionByZero,
  MixedContexts,
  NotMonic,
  ZeroElement,
  BoundExceeded,
  NotASquare,
  BadIndex,
  IdentityElement,
  NotNormOne,
  ElementOutsideGroup,
  BijectionFailure,
  BadBasisDimension,
  ElementInBaseField,
  OracleMismatch,
  BoundViolation,
  DuplicateShifts,
  InvalidTarget,
  EvenCharacteristic,
  MultipleRepresentations,
  NotAMember,
  PreconditionFailed,
  NotChar3,
  ExhaustedWithoutWitness,
  NoWitness,
  LiftVerificationFailed,
  IdentityViolated,
  NoCompatibleRoot,
  VerificationFailed,
  NoGoodShift,
  BudgetExceeded,
  InvalidCertificate,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors caused by caller input (bad parameters or elements), as
/// opposed to violated invariants that indicate an implementation bug.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool cond, Errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ngs
