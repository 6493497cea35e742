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

#pragma once

#include <stdexcept>
#include <string>

namespace relsymp {

/// Machine-readable failure codes. The CLI prints `errc_name(code)` verbatim.
enum class Errc {
  DescriptorMismatch,
  NotAUnit,
  NotDivisible,
  NotADomain,
  NotEuclidean,
  CertificateRequired,
  NotEnumerable,
  QuotientNotComputable,
  NotSquare,
  NotAlternating,
  OddSize,
  SizeMismatch,
  BadIndex,
  NotInvertible,
  NotRelative,
  NotSpecial,
  NotUnimodular,
  NeedsDimensionThree,
  NotIsotropicPair,
  WitnessNotFound,
  PfaffianNotUnit,
  NotInKernelC,
  ExhaustedBudget,
  CertificateInvalid,
  HypothesisFailed,
  NotComaximal,
  Incompatible,
  InvalidArgument,
  SyntaxError,
  TypeError,
  UnknownBinding,
  Usage,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace relsymp
