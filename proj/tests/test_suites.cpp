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


#include "relsymp/suites.hpp"
#include "test_helpers.hpp"

using namespace relsymp;

TEST_CASE("suite reports do not depend on threading") {
  for (const std::string& name : suite_names()) {
    SuiteOptions serial, parallel;
    serial.parallel = false;
    serial.trials = parallel.trials = 8;
    const SuiteReport a = run_suite(name, serial), b = run_suite(name, parallel);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t k = 0; k < a.checks.size(); ++k) {
      CHECK(a.checks[k].name == b.checks[k].name);
      CHECK(a.checks[k].failures == b.checks[k].failures);
    }
    CHECK(a.passed());
  }
  CHECK_ERRC(run_suite("nope"), Errc::InvalidArgument);
}
