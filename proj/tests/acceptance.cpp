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


// Runs every acceptance criterion at its stated trial counts and time
// limits, printing one PASS/FAIL line each. Exit status is 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "relsymp/document.hpp"
#include "relsymp/suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

Outcome suite_criterion(const std::string& suite) {
  const relsymp::SuiteReport rep = relsymp::run_suite(suite);
  size_t trials = 0;
  for (const auto& c : rep.checks) {
    trials += c.trials;
    if (!c.passed())
      return {false, c.name + ": " + std::to_string(c.failures) + "/" +
                         std::to_string(c.trials) + " failed, first: " +
                         c.first_failure};
  }
  return {true, std::to_string(rep.checks.size()) + " checks, " +
                    std::to_string(trials) + " trials"};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Captures stdout of a shell command; returns the exit status.
int capture(const std::string& cmd, std::string& out) {
  out.clear();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome cli_criterion() {
  size_t docs = 0;
  for (const auto& entry : std::filesystem::directory_iterator(RELSYMP_CORPUS_DIR)) {
    if (entry.path().extension() != ".rsd") continue;
    ++docs;
    const std::string text = slurp(entry.path());
    try {
      const std::string printed = relsymp::print_document(relsymp::parse_document(text));
      if (printed != text)
        return {false, entry.path().filename().string() + " is not canonical"};
      if (relsymp::print_document(relsymp::parse_document(printed)) != printed)
        return {false, entry.path().filename().string() + " does not round trip"};
    } catch (const std::exception& e) {
      return {false, entry.path().filename().string() + ": " + e.what()};
    }
  }
  if (docs != 30) return {false, "corpus has " + std::to_string(docs) + " documents"};
  const std::string cmd = std::string("\"") + RELSYMP_CLI + "\" suite all --seed 7 </dev/null 2>/dev/null";
  std::string first, second;
  const int s1 = capture(cmd, first);
  const int s2 = capture(cmd, second);
  if (s1 != 0 || s2 != 0)
    return {false, "suite all exited with " + std::to_string(s1) + " and " + std::to_string(s2)};
  if (first != second) return {false, "suite all output differs between runs"};
  if (first.empty()) return {false, "suite all printed nothing"};
  return {true, "30 documents round trip, suite all reproducible (" +
                    std::to_string(first.size()) + " bytes)"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"elementary relations", 30, [] { return suite_criterion("elementary"); }},
      {"steinberg relations and symbols", 30, [] { return suite_criterion("steinberg"); }},
      {"esd transvections", 30, [] { return suite_criterion("esd"); }},
      {"pfaffian clauses", 60, [] { return suite_criterion("pfaffian"); }},
      {"excision and lifts", 60, [] { return suite_criterion("excision"); }},
      {"witt calculus", 60, [] { return suite_criterion("witt"); }},
      {"completion and patching", 60, [] { return suite_criterion("completion"); }},
      {"cli round trip and reproducibility", 300, cli_criterion},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.ok && s >= c.limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    all = all && o.ok;
    std::printf("%s %-36s %7.2fs / %4.0fs  %s\n", o.ok ? "PASS" : "FAIL",
                c.name.c_str(), s, c.limit_s, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
