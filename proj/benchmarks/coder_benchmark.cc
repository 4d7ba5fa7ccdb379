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

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "ans_stack/ans_stack.h"

namespace ans_stack {
namespace {

constexpr std::size_t kLength = 1 << 18;

const StreamingConfig& ConfigAt(int index) { return kPresetConfigs[index]; }

const Corpus& CorpusFor(int entropy_tenths) {
  static std::vector<std::pair<int, Corpus>> cache;
  for (const auto& [key, corpus] : cache) {
    if (key == entropy_tenths) return corpus;
  }
  cache.emplace_back(entropy_tenths, *MakeCorpus(1, entropy_tenths / 10.0, kLength, 256));
  return cache.back().second;
}

void SetCounters(benchmark::State& state, const StreamingConfig& config) {
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kLength));
  state.SetLabel(config.ToString());
}

void BM_Encode(benchmark::State& state) {
  const StreamingConfig& config = ConfigAt(static_cast<int>(state.range(0)));
  const Corpus& corpus = CorpusFor(static_cast<int>(state.range(1)));
  const CategoricalModel model = *Quantize(corpus.model, config.precision);
  for (auto _ : state) {
    AnsCoder coder = *AnsCoder::Create(config);
    for (std::size_t i = corpus.symbols.size(); i-- > 0;) {
      benchmark::DoNotOptimize(coder.Push(corpus.symbols[i], model));
    }
    benchmark::DoNotOptimize(coder.GetCompressed());
  }
  SetCounters(state, config);
}

template <typename M>
void DecodeLoop(benchmark::State& state, const StreamingConfig& config, const Corpus& corpus,
                const CategoricalModel& model, const M& decode_model) {
  AnsCoder encoder = *AnsCoder::Create(config);
  for (std::size_t i = corpus.symbols.size(); i-- > 0;) {
    (void)encoder.Push(corpus.symbols[i], model);
  }
  const std::vector<Word> compressed = encoder.GetCompressed();
  for (auto _ : state) {
    AnsCoder coder = *AnsCoder::Create(config, compressed);
    Symbol checksum = 0;
    for (std::size_t i = 0; i < corpus.symbols.size(); ++i) checksum ^= *coder.Pop(decode_model);
    benchmark::DoNotOptimize(checksum);
  }
  SetCounters(state, config);
}

void BM_DecodeBinarySearch(benchmark::State& state) {
  const StreamingConfig& config = ConfigAt(static_cast<int>(state.range(0)));
  const Corpus& corpus = CorpusFor(static_cast<int>(state.range(1)));
  const CategoricalModel model = *Quantize(corpus.model, config.precision);
  DecodeLoop(state, config, corpus, model, model);
}

void BM_DecodeLookup(benchmark::State& state) {
  const StreamingConfig& config = ConfigAt(static_cast<int>(state.range(0)));
  const Corpus& corpus = CorpusFor(static_cast<int>(state.range(1)));
  const CategoricalModel model = *Quantize(corpus.model, config.precision);
  auto lookup = LookupModel::Build(model);
  if (!lookup.ok()) {
    state.SkipWithError(lookup.error().ToString().c_str());
    return;
  }
  DecodeLoop(state, config, corpus, model, *lookup);
}

void AllPresets(benchmark::internal::Benchmark* b) {
  for (int config = 0; config < static_cast<int>(kPresetConfigs.size()); ++config) {
    for (const int entropy_tenths : {4, 40}) b->Args({config, entropy_tenths});
  }
}

void LowPrecisionPresets(benchmark::internal::Benchmark* b) {
  for (int config = 0; config < static_cast<int>(kPresetConfigs.size()); ++config) {
    if (kPresetConfigs[config].precision > LookupModel::kMaxLookupPrecision) continue;
    for (const int entropy_tenths : {4, 40}) b->Args({config, entropy_tenths});
  }
}

BENCHMARK(BM_Encode)->Apply(AllPresets)->ArgNames({"config", "entropy_x10"});
BENCHMARK(BM_DecodeBinarySearch)->Apply(AllPresets)->ArgNames({"config", "entropy_x10"});
BENCHMARK(BM_DecodeLookup)->Apply(LowPrecisionPresets)->ArgNames({"config", "entropy_x10"});

}  // namespace
}  // namespace ans_stack

BENCHMARK_MAIN();
