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

#ifndef ANS_STACK_BENCH_H_
#define ANS_STACK_BENCH_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ans_stack/config.h"
#include "ans_stack/error.h"
#include "ans_stack/model.h"

namespace ans_stack {

// A shuffled message whose empirical distribution is exactly `model`, so the
// message's information content under `model` is symbols.size() * entropy.
struct Corpus {
  std::uint64_t seed = 0;
  std::vector<Symbol> symbols;
  RealModel model;
  double entropy = 0.0;
};

// Synthetic corpus with a prescribed entropy. Symbol counts apportion
// `length` over a softmax of seeded Gaussian logits (sorted, so symbol 0 is
// most probable) at an inverse temperature found by bisection; the seeded
// shuffle of that multiset is the message. kConfigInvalid unless
// 0 < entropy_target <= log2(alphabet), length > 0, and the counts reach the
// target within 1%.
Result<Corpus> MakeCorpus(std::uint64_t seed, double entropy_target,
                          std::size_t length, std::uint32_t alphabet);

struct BenchRow {
  double entropy_bits_per_symbol = 0.0;
  StreamingConfig config;
  DecodeStrategy decode_strategy = DecodeStrategy::kBinarySearch;
  // (emitted bits - information content under P) / information content.
  double total_overhead_percent = 0.0;
  // D_KL(P || Q) / H(P); the part of the overhead due to quantization.
  double kl_overhead_percent = 0.0;
  double encode_ns_per_symbol = 0.0;
  double decode_ns_per_symbol = 0.0;

  std::size_t symbols = 0;
  std::uint64_t emitted_bits = 0;
  double information_content_bits = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Encodes and decodes `corpus` with a model quantized at config.precision.
// Each timing is the median over `repeats` of the second of two back-to-back
// runs. A roundtrip or checksum mismatch is reported as kInsufficientData,
// and lookup tables above precision 16 as kConfigInvalid.
Result<BenchRow> RunBench(const Corpus& corpus, const StreamingConfig& config,
                          DecodeStrategy strategy, int repeats);

inline constexpr std::string_view kCsvHeader =
    "entropy,config,strategy,total_overhead_pct,kl_overhead_pct,encode_ns,decode_ns\n";

std::string EmitCsv(const BenchReport& report);

struct SweepOptions {
  std::vector<double> entropies = {0.001, 0.01, 0.1, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0};
  std::vector<StreamingConfig> configs = {kDefaultConfig, kSmallConfig};
  std::vector<DecodeStrategy> strategies = {DecodeStrategy::kBinarySearch};
  std::size_t length = 1'000'000;
  std::uint32_t alphabet = 256;
  std::uint64_t seed = 0;
  int seeds = 1;
  int repeats = 10;
  unsigned threads = 1;
};

// One slice per (entropy, seed); every slice is run under every config and
// strategy. Lookup-table rows are only produced for configs with precision
// <= 16. Slices are spread over `threads` workers, each owning its coders.
Result<BenchReport> RunSweep(const SweepOptions& options);

// ANS_STACK_THREADS if set to a positive integer, else 1.
unsigned ThreadsFromEnvironment();

}  // namespace ans_stack

#endif  // ANS_STACK_BENCH_H_
