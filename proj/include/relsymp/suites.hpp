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

/**
 * @file suites.hpp
 * @brief Named randomized property suites.
 *
 * Each check draws trial k from Rng(seed, stream_id(check) + k), so a
 * report depends only on (suite, seed, trials) and never on the number of
 * threads.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace relsymp {

struct CheckResult {
  std::string name;
  size_t trials = 0;
  size_t failures = 0;
  /// Message of the lowest-index failing trial.
  std::string first_failure;

  bool passed() const noexcept { return failures == 0 && trials > 0; }
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool passed() const noexcept;
};

struct SuiteOptions {
  uint64_t seed = 7;
  /// Overrides the trial count of every randomized check.
  std::optional<size_t> trials;
  bool parallel = true;
};

/// esd, elementary, steinberg, pfaffian, excision, witt, completion.
const std::vector<std::string>& suite_names();

/// `name` is one of suite_names() or "all". Throws InvalidArgument.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

}  // namespace relsymp
