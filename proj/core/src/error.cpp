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

#include "ngsinger/error.hpp"

namespace ngs {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::ReduciblePoly: return "ReduciblePoly";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedContexts: return "MixedContexts";
    case Errc::NotMonic: return "NotMonic";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotASquare: return "NotASquare";
    case Errc::BadIndex: return "BadIndex";
    case Errc::IdentityElement: return "IdentityElement";
    case Errc::NotNormOne: return "NotNormOne";
    case Errc::ElementOutsideGroup: return "ElementOutsideGroup";
    case Errc::BijectionFailure: return "BijectionFailure";
    case Errc::BadBasisDimension: return "BadBasisDimension";
    case Errc::ElementInBaseField: return "ElementInBaseField";
    case Errc::OracleMismatch: return "OracleMismatch";
    case Errc::BoundViolation: return "BoundViolation";
    case Errc::DuplicateShifts: return "DuplicateShifts";
    case Errc::InvalidTarget: return "InvalidTarget";
    case Errc::EvenCharacteristic: return "EvenCharacteristic";
    case Errc::MultipleRepresentations: return "MultipleRepresentations";
    case Errc::NotAMember: return "NotAMember";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::NotChar3: return "NotChar3";
    case Errc::ExhaustedWithoutWitness: return "ExhaustedWithoutWitness";
    case Errc::NoWitness: return "NoWitness";
    case Errc::LiftVerificationFailed: return "LiftVerificationFailed";
    case Errc::IdentityViolated: return "IdentityViolated";
    case Errc::NoCompatibleRoot: return "NoCompatibleRoot";
    case Errc::VerificationFailed: return "VerificationFailed";
    case Errc::NoGoodShift: return "NoGoodShift";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidCertificate: return "InvalidCertificate";
  }
  return "Unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime:
    case Errc::ReduciblePoly:
    case Errc::DegreeMismatch:
    case Errc::DivisionByZero:
    case Errc::MixedContexts:
    case Errc::NotMonic:
    case Errc::ZeroElement:
    case Errc::NotASquare:
    case Errc::BadIndex:
    case Errc::IdentityElement:
    case Errc::NotNormOne:
    case Errc::ElementOutsideGroup:
    case Errc::BadBasisDimension:
    case Errc::ElementInBaseField:
    case Errc::DuplicateShifts:
    case Errc::InvalidTarget:
    case Errc::EvenCharacteristic:
    case Errc::NotAMember:
    case Errc::PreconditionFailed:
    case Errc::NotChar3:
    case Errc::BoundExceeded:
    case Errc::InvalidCertificate:
      return true;
    default:
      return false;
  }
}

}  // namespace ngs
