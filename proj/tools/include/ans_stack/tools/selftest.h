// Copyright 2026 The ans-stack Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANS_STACK_TOOLS_SELFTEST_H_
#define ANS_STACK_TOOLS_SELFTEST_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "ans_stack/config.h"
#include "ans_stack/model.h"

namespace ans_stack::selftest {

// Random valid model at `precision` with 1 to max_alphabet symbols. Mixes
// uniform cut points (zero frequencies allowed) with near-deterministic
// models whose minor symbols have frequency 1.
CategoricalModel RandomModel(std::mt19937_64& rng, std::uint32_t precision,
                             std::size_t max_alphabet = 256);

// A symbol with nonzero frequency: half the time drawn from the model itself,
// otherwise uniformly among the encodable symbols.
Symbol RandomSymbol(std::mt19937_64& rng, const CategoricalModel& model);

std::vector<Word> RandomWords(std::mt19937_64& rng, std::uint32_t word_size,
                              std::size_t count);

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
};

struct SelfTestOptions {
  std::uint64_t seed = 20260101;
  std::size_t trials_per_config = 25'000;
  // Mutation hook: run the scenario suites against a coder whose flush
  // threshold is off by one bit. The suites must then report failures.
  bool inject_flush_fault = false;
};

struct SelfTestReport {
  std::vector<SuiteResult> suites;

  bool passed() const;
  std::size_t total_checks() const;
  std::size_t total_failures() const;
};

// Push/pop scenarios (a) and (b) and invariant preservation for every preset,
// ChainCoder locality, and frame concatenation.
SelfTestReport RunSelfTest(const SelfTestOptions& options);

void PrintReport(const SelfTestReport& report, std::ostream& out);

}  // namespace ans_stack::selftest

#endif  // ANS_STACK_TOOLS_SELFTEST_H_
