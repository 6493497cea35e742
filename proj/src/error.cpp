// Copyright 2026 The relsymp Authors
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

#include "relsymp/error.hpp"

namespace relsymp {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DescriptorMismatch: return "DescriptorMismatch";
    case Errc::NotAUnit: return "NotAUnit";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::NotADomain: return "NotADomain";
    case Errc::NotEuclidean: return "NotEuclidean";
    case Errc::CertificateRequired: return "CertificateRequired";
    case Errc::NotEnumerable: return "NotEnumerable";
    case Errc::QuotientNotComputable: return "QuotientNotComputable";
    case Errc::NotSquare: return "NotSquare";
    case Errc::NotAlternating: return "NotAlternating";
    case Errc::OddSize: return "OddSize";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BadIndex: return "BadIndex";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::NotRelative: return "NotRelative";
    case Errc::NotSpecial: return "NotSpecial";
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::NeedsDimensionThree: return "NeedsDimensionThree";
    case Errc::NotIsotropicPair: return "NotIsotropicPair";
    case Errc::WitnessNotFound: return "WitnessNotFound";
    case Errc::PfaffianNotUnit: return "PfaffianNotUnit";
    case Errc::NotInKernelC: return "NotInKernelC";
    case Errc::ExhaustedBudget: return "ExhaustedBudget";
    case Errc::CertificateInvalid: return "CertificateInvalid";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::NotComaximal: return "NotComaximal";
    case Errc::Incompatible: return "Incompatible";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::TypeError: return "TypeError";
    case Errc::UnknownBinding: return "UnknownBinding";
    case Errc::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace relsymp
