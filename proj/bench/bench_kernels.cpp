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


// Serial reference vs OpenMP kernels: matrix products over Z and Z/m, and
// suite trial loops. Prints one line per kernel.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "relsymp/random.hpp"
#include "relsymp/suites.hpp"

using namespace relsymp;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.4fs  parallel %9.4fs  speedup %5.2fx  %s\n", name,
              serial, parallel, serial / parallel, same ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());
  Rng rng(2026, 0);
  for (const Ring& r : {Ring::integers(), Ring::integers_mod(1000003)}) {
    for (size_t n : {32, 64, 96}) {
      const Matrix a = random_matrix(r, n, n, rng), b = random_matrix(r, n, n, rng);
      Matrix s, p;
      const double ts = seconds([&] { s = multiply_serial(a, b); }, 3);
      const double tp = seconds([&] { p = multiply_parallel(a, b); }, 3);
      char name[64];
      std::snprintf(name, sizeof name, "matmul %s n=%zu", r.describe().c_str(), n);
      report(name, ts, tp, s == p);
    }
  }
  for (const char* suite : {"elementary", "pfaffian", "excision"}) {
    SuiteOptions serial, parallel;
    serial.parallel = false;
    serial.trials = parallel.trials = 200;
    SuiteReport rs, rp;
    const double ts = seconds([&] { rs = run_suite(suite, serial); }, 1);
    const double tp = seconds([&] { rp = run_suite(suite, parallel); }, 1);
    bool same = rs.checks.size() == rp.checks.size();
    for (size_t k = 0; same && k < rs.checks.size(); ++k)
      same = rs.checks[k].failures == rp.checks[k].failures &&
             rs.checks[k].first_failure == rp.checks[k].first_failure;
    char name[64];
    std::snprintf(name, sizeof name, "suite %s", suite);
    report(name, ts, tp, same);
  }
}
