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

#include "ans_stack/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "ans_stack/ans_coder.h"

namespace ans_stack {

namespace {

using Clock = std::chrono::steady_clock;

// softmax(beta * logits) in a numerically stable way.
std::vector<double> Tilt(const std::vector<double>& logits, double beta) {
  const double top = *std::max_element(logits.begin(), logits.end());
  std::vector<double> p(logits.size());
  long double sum = 0.0L;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    p[i] = std::exp(beta * (logits[i] - top));
    sum += p[i];
  }
  for (double& value : p) value = static_cast<double>(value / sum);
  return p;
}

// Largest-remainder apportionment of `length` symbols to probabilities `p`.
std::vector<std::uint64_t> Apportion(const std::vector<double>& p, std::size_t length) {
  std::vector<std::uint64_t> counts(p.size());
  std::vector<std::pair<double, std::size_t>> remainders(p.size());
  std::uint64_t assigned = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const double exact = p[x] * static_cast<double>(length);
    counts[x] = std::min<std::uint64_t>(static_cast<std::uint64_t>(exact), length - assigned);
    assigned += counts[x];
    remainders[x] = {exact - static_cast<double>(counts[x]), x};
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < length; i = (i + 1) % remainders.size()) {
    ++counts[remainders[i].second];
    ++assigned;
  }
  return counts;
}

double EntropyOfCounts(const std::vector<std::uint64_t>& counts, std::size_t length) {
  long double h = 0.0L;
  const auto total = static_cast<long double>(length);
  for (const std::uint64_t c : counts) {
    if (c > 0) h -= (c / total) * std::log2l(c / total);
  }
  return static_cast<double>(h);
}

double Median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

template <typename Fn>
double TimeSecondRunNs(Fn&& run) {
  run();
  const auto start = Clock::now();
  run();
  return std::chrono::duration<double, std::nano>(Clock::now() - start).count();
}

template <EntropyModel M>
Result<BenchRow> Measure(const Corpus& corpus, const StreamingConfig& config,
                         const M& model, int repeats) {
  const std::vector<Symbol>& symbols = corpus.symbols;
  const std::size_t k = symbols.size();

  std::vector<Word> compressed;
  std::optional<Error> failure;
  std::vector<double> encode_ns;
  for (int r = 0; r < repeats; ++r) {
    encode_ns.push_back(TimeSecondRunNs([&] {
      auto coder = AnsCoder::Create(config);
      for (std::size_t i = k; i-- > 0;) {
        if (auto status = coder->Push(symbols[i], model); !status.ok()) {
          failure = status.error();
          break;
        }
      }
      compressed = coder->GetCompressed();
    }));
    if (failure) return *failure;
  }

  Symbol expected_checksum = 0;
  for (const Symbol s : symbols) expected_checksum ^= s;

  std::vector<Symbol> decoded(k);
  Symbol checksum = 0;
  std::vector<double> decode_ns;
  for (int r = 0; r < repeats; ++r) {
    // Coders are built outside the timed region; only popping is measured.
    auto warmup = AnsCoder::Create(config, compressed);
    auto timed = AnsCoder::Create(config, compressed);
    auto decode = [&](AnsCoder& coder) {
      checksum = 0;
      for (std::size_t i = 0; i < k; ++i) {
        const Symbol s = *coder.Pop(model);
        decoded[i] = s;
        checksum ^= s;
      }
    };
    decode(*warmup);
    const auto start = Clock::now();
    decode(*timed);
    decode_ns.push_back(std::chrono::duration<double, std::nano>(Clock::now() - start).count());
    if (!timed->empty()) {
      return MakeError(ErrorKind::kInsufficientData, "decoder did not return to empty state");
    }
  }
  if (checksum != expected_checksum || decoded != symbols) {
    return MakeError(ErrorKind::kInsufficientData,
                     "roundtrip mismatch for config " + config.ToString());
  }

  long double information = 0.0L;
  for (const Symbol s : symbols) information -= std::log2l(corpus.model.probability(s));

  BenchRow row;
  row.entropy_bits_per_symbol = corpus.entropy;
  row.config = config;
  row.symbols = k;
  row.emitted_bits = static_cast<std::uint64_t>(compressed.size()) * config.word_size;
  row.information_content_bits = static_cast<double>(information);
  row.total_overhead_percent =
      information > 0.0L
          ? static_cast<double>(100.0L * (row.emitted_bits - information) / information)
          : 0.0;
  const double per_symbol = k > 0 ? 1.0 / static_cast<double>(k) : 0.0;
  row.encode_ns_per_symbol = Median(encode_ns) * per_symbol;
  row.decode_ns_per_symbol = Median(decode_ns) * per_symbol;
  return row;
}

}  // namespace

Result<Corpus> MakeCorpus(std::uint64_t seed, double entropy_target, std::size_t length,
                          std::uint32_t alphabet) {
  const double max_entropy = alphabet > 0 ? std::log2(static_cast<double>(alphabet)) : 0.0;
  if (!(entropy_target > 0.0) || entropy_target > max_entropy + 1e-12) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "entropy target " + std::to_string(entropy_target) +
                         " outside (0, log2(" + std::to_string(alphabet) + ")]");
  }
  if (length == 0) {
    return MakeError(ErrorKind::kConfigInvalid, "corpus length must be positive");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<double> logits(alphabet);
  for (double& logit : logits) logit = normal(rng);
  std::sort(logits.begin(), logits.end(), std::greater<>());

  // Entropy decreases monotonically in beta; the apportioned counts follow it
  // up to rounding, so keep the closest candidate seen.
  auto candidate = [&](double beta) { return Apportion(Tilt(logits, beta), length); };
  std::vector<std::uint64_t> counts = candidate(0.0);
  double best_gap = std::fabs(EntropyOfCounts(counts, length) - entropy_target);
  if (best_gap > 1e-12) {
    double lo = 0.0;
    double hi = 1.0;
    while (EntropyOfCounts(candidate(hi), length) > entropy_target && hi < 1e9) hi *= 2.0;
    for (int iteration = 0; iteration < 200 && best_gap > 1e-9 * entropy_target; ++iteration) {
      const double mid = 0.5 * (lo + hi);
      std::vector<std::uint64_t> trial = candidate(mid);
      const double h = EntropyOfCounts(trial, length);
      if (std::fabs(h - entropy_target) < best_gap) {
        best_gap = std::fabs(h - entropy_target);
        counts = trial;
      }
      (h > entropy_target ? lo : hi) = mid;
    }
  }

  std::vector<double> p(alphabet);
  for (std::size_t x = 0; x < alphabet; ++x) {
    p[x] = static_cast<double>(counts[x]) / static_cast<double>(length);
  }
  auto model = RealModel::Create(p);
  if (!model.ok()) return model.error();

  std::vector<Symbol> symbols;
  symbols.reserve(length);
  for (Symbol x = 0; x < alphabet; ++x) symbols.insert(symbols.end(), counts[x], x);
  std::shuffle(symbols.begin(), symbols.end(), rng);

  const double entropy = Entropy(*model);
  if (std::fabs(entropy - entropy_target) > 0.01 * entropy_target) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "entropy target " + std::to_string(entropy_target) +
                         " is not reachable with " + std::to_string(length) + " symbols");
  }
  return Corpus{seed, std::move(symbols), std::move(*model), entropy};
}

Result<BenchRow> RunBench(const Corpus& corpus, const StreamingConfig& config,
                          DecodeStrategy strategy, int repeats) {
  ANS_STACK_RETURN_IF_ERROR(ValidateConfig(config));
  if (repeats < 1) {
    return MakeError(ErrorKind::kConfigInvalid, "repeats must be at least 1");
  }
  auto model = Quantize(corpus.model, config.precision);
  if (!model.ok()) return model.error();
  auto kl = KlDivergence(corpus.model, *model);
  if (!kl.ok()) return kl.error();

  Result<BenchRow> row = MakeError(ErrorKind::kConfigInvalid, "unreachable");
  if (strategy == DecodeStrategy::kLookupTable) {
    auto lookup = LookupModel::Build(*model);
    if (!lookup.ok()) return lookup.error();
    row = Measure(corpus, config, *lookup, repeats);
  } else {
    row = Measure(corpus, config, *model, repeats);
  }
  if (!row.ok()) return row;
  row->decode_strategy = strategy;
  row->kl_overhead_percent = corpus.entropy > 0.0 ? 100.0 * *kl / corpus.entropy : 0.0;
  return row;
}

std::string EmitCsv(const BenchReport& report) {
  std::string out(kCsvHeader);
  char line[256];
  for (const BenchRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "%.6g,%s,%s,%.6g,%.6g,%.3f,%.3f\n",
                  row.entropy_bits_per_symbol, row.config.ToString().c_str(),
                  std::string(DecodeStrategyName(row.decode_strategy)).c_str(),
                  row.total_overhead_percent, row.kl_overhead_percent,
                  row.encode_ns_per_symbol, row.decode_ns_per_symbol);
    out += line;
  }
  return out;
}

Result<BenchReport> RunSweep(const SweepOptions& options) {
  struct Slice {
    double entropy;
    std::uint64_t seed;
  };
  std::vector<Slice> slices;
  for (const double entropy : options.entropies) {
    for (int s = 0; s < options.seeds; ++s) {
      slices.push_back({entropy, options.seed + static_cast<std::uint64_t>(s)});
    }
  }

  std::vector<std::vector<BenchRow>> rows_per_slice(slices.size());
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::optional<Error> failure;

  auto worker = [&] {
    for (std::size_t i = next++; i < slices.size(); i = next++) {
      auto corpus = MakeCorpus(slices[i].seed, slices[i].entropy, options.length,
                               options.alphabet);
      if (!corpus.ok()) {
        std::lock_guard lock(failure_mutex);
        failure = corpus.error();
        return;
      }
      for (const StreamingConfig& config : options.configs) {
        for (const DecodeStrategy strategy : options.strategies) {
          if (strategy == DecodeStrategy::kLookupTable &&
              config.precision > LookupModel::kMaxLookupPrecision) {
            continue;
          }
          auto row = RunBench(*corpus, config, strategy, options.repeats);
          if (!row.ok()) {
            std::lock_guard lock(failure_mutex);
            failure = row.error();
            return;
          }
          rows_per_slice[i].push_back(*row);
        }
      }
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();
  if (failure) return *failure;

  BenchReport report;
  for (auto& rows : rows_per_slice) {
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

unsigned ThreadsFromEnvironment() {
  const char* value = std::getenv("ANS_STACK_THREADS");
  if (value == nullptr) return 1;
  char* end = nullptr;
  const long parsed = std::strtol(value, &end, 10);
  if (end == value || *end != '\0' || parsed < 1) return 1;
  return static_cast<unsigned>(parsed);
}

}  // namespace ans_stack
