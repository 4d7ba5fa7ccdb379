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

#include "ans_stack/tools/selftest.h"

#include <algorithm>
#include <array>
#include <iomanip>
#include <span>

#include "ans_stack/ans_coder.h"
#include "ans_stack/chain_coder.h"
#include "ans_stack/io.h"

namespace ans_stack::selftest {

namespace {

// AnsCoder with the flush threshold shifted by one bit: it flushes only when
// head >= 2 * m * 2^(head_capacity - precision), so some pushes overflow (i').
class FaultyFlushCoder {
 public:
  static Result<FaultyFlushCoder> Create(const StreamingConfig& config,
                                         std::span<const Word> words = {}) {
    auto inner = AnsCoder::Create(config, words);
    if (!inner.ok()) return inner.error();
    FaultyFlushCoder coder;
    coder.config_ = config;
    coder.bulk_.assign(inner->bulk().begin(), inner->bulk().end());
    coder.head_ = inner->head();
    return coder;
  }

  Status Push(Symbol symbol, const CategoricalModel& model) {
    const std::uint64_t freq = model.frequency(symbol);
    if (freq == 0) return MakeError(ErrorKind::kFrequencyZero, "zero frequency");
    if ((head_ >> (config_.head_capacity - config_.precision + 1)) >= freq) {
      bulk_.push_back(static_cast<Word>(head_) & WordMask());
      head_ >>= config_.word_size;
    }
    head_ = ((head_ / freq) << config_.precision) | (head_ % freq + model.cumulative(symbol));
    return OkStatus();
  }

  Result<Symbol> Pop(const CategoricalModel& model) {
    const auto z = static_cast<std::uint64_t>(head_) & ((std::uint64_t{1} << config_.precision) - 1);
    head_ >>= config_.precision;
    const Located located = model.Locate(z);
    head_ = head_ * model.frequency(located.symbol) + located.offset;
    if (head_ < RefillThreshold() && !bulk_.empty()) {
      head_ = (head_ << config_.word_size) | bulk_.back();
      bulk_.pop_back();
    }
    return located.symbol;
  }

  bool InvariantsHold() const {
    return (head_ >> config_.head_capacity) == 0 &&
           (bulk_.empty() || head_ >= RefillThreshold());
  }

  friend bool operator==(const FaultyFlushCoder&, const FaultyFlushCoder&) = default;

 private:
  Word WordMask() const {
    return config_.word_size == 64 ? ~Word{0} : (Word{1} << config_.word_size) - 1;
  }
  Head RefillThreshold() const {
    return Head{1} << (config_.head_capacity - config_.word_size);
  }

  StreamingConfig config_;
  std::vector<Word> bulk_;
  Head head_ = 0;
};

// Pushes slightly more often than it pops so the state keeps a nonempty bulk,
// but caps its size.
template <typename Coder>
void EvolveHistory(Coder& coder, std::mt19937_64& rng, std::uint32_t precision,
                   std::size_t bulk_len) {
  const CategoricalModel model = RandomModel(rng, precision);
  const bool push = bulk_len < 4096 && std::uniform_int_distribution<int>(0, 99)(rng) < 55;
  if (push) {
    (void)coder.Push(RandomSymbol(rng, model), model);
  } else {
    (void)coder.Pop(model);
  }
}

std::size_t BulkLen(const AnsCoder& coder) { return coder.bulk().size(); }
std::size_t BulkLen(const FaultyFlushCoder&) { return 0; }

template <typename Coder>
void ScenarioSuites(const StreamingConfig& config, std::size_t trials,
                    std::mt19937_64& rng, SelfTestReport& report) {
  SuiteResult a{"scenario_a[" + config.ToString() + "]"};
  SuiteResult b{"scenario_b[" + config.ToString() + "]"};

  auto coder = *Coder::Create(config, RandomWords(rng, config.word_size, rng() % 8));
  for (std::size_t t = 0; t < trials; ++t) {
    EvolveHistory(coder, rng, config.precision, BulkLen(coder));
    if (!coder.InvariantsHold()) {
      // Only reachable for the faulty coder; start over from a clean state.
      coder = *Coder::Create(config, RandomWords(rng, config.word_size, rng() % 8));
    }
    const CategoricalModel model = RandomModel(rng, config.precision);
    const Symbol symbol = RandomSymbol(rng, model);

    // (a) push then pop.
    const Coder before_a = coder;
    bool ok = coder.Push(symbol, model).ok() && coder.InvariantsHold();
    auto popped = coder.Pop(model);
    ok = ok && popped.ok() && *popped == symbol && coder.InvariantsHold() && coder == before_a;
    ++a.checks;
    if (!ok) {
      ++a.failures;
      coder = before_a;
    }

    // (b) pop then push.
    const Coder before_b = coder;
    auto decoded = coder.Pop(model);
    ok = decoded.ok() && coder.InvariantsHold() && coder.Push(*decoded, model).ok() &&
         coder.InvariantsHold() && coder == before_b;
    ++b.checks;
    if (!ok) {
      ++b.failures;
      coder = before_b;
    }
  }
  report.suites.push_back(a);
  report.suites.push_back(b);
}

void InvariantSuite(const StreamingConfig& config, std::size_t trials, std::mt19937_64& rng,
                    SelfTestReport& report) {
  SuiteResult result{"invariants[" + config.ToString() + "]"};
  std::size_t done = 0;
  while (done < trials) {
    auto coder = AnsCoder::Create(config, RandomWords(rng, config.word_size, rng() % 16));
    ++result.checks;
    if (!coder.ok() || !coder->InvariantsHold()) {
      ++result.failures;
      ++done;
      continue;
    }
    for (int op = 0; op < 64 && done < trials; ++op, ++done) {
      EvolveHistory(*coder, rng, config.precision, coder->bulk().size());
      ++result.checks;
      if (!coder->InvariantsHold()) ++result.failures;
    }
  }
  report.suites.push_back(result);
}

void ChainLocalitySuite(std::size_t trials, std::mt19937_64& rng, SelfTestReport& report) {
  constexpr std::array<std::uint32_t, 6> kPrecisions = {4, 8, 12, 16, 24, 32};
  SuiteResult result{"chain_locality"};
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint32_t precision = kPrecisions[rng() % kPrecisions.size()];
    const std::size_t length = 1 + rng() % 24;
    const std::vector<Word> words = RandomWords(rng, precision, length);
    std::vector<CategoricalModel> models;
    for (std::size_t i = 0; i < length; ++i) models.push_back(RandomModel(rng, precision, 64));

    auto decode = [&](const std::vector<CategoricalModel>& ms, std::vector<Symbol>& out) {
      auto coder = ChainCoder::Create(precision, words);
      if (!coder.ok()) return false;
      for (const CategoricalModel& m : ms) {
        auto s = coder->Pop(m);
        if (!s.ok() || !coder->InvariantsHold()) return false;
        out.push_back(*s);
      }
      return true;
    };
    std::vector<Symbol> original;
    std::vector<Symbol> perturbed;
    bool ok = decode(models, original);
    const std::size_t j = rng() % length;
    models[j] = RandomModel(rng, precision, 64);
    ok = ok && decode(models, perturbed);
    for (std::size_t i = 0; ok && i < length; ++i) {
      if (i != j && original[i] != perturbed[i]) ok = false;
    }
    ++result.checks;
    if (!ok) ++result.failures;
  }
  report.suites.push_back(result);
}

void FrameSuite(std::size_t trials, std::mt19937_64& rng, SelfTestReport& report) {
  constexpr std::array<StreamingConfig, 3> kConfigs = {kDefaultConfig, kSmallConfig,
                                                       StreamingConfig{4, 4, 8}};
  SuiteResult result{"frame_concatenation"};
  for (std::size_t t = 0; t < trials; ++t) {
    const StreamingConfig& config = kConfigs[t % kConfigs.size()];
    const std::size_t length = rng() % 64;
    std::vector<CategoricalModel> models;
    std::vector<Symbol> message;
    for (std::size_t i = 0; i < std::max<std::size_t>(length, 1); ++i) {
      models.push_back(RandomModel(rng, config.precision, 64));
      if (i < length) message.push_back(RandomSymbol(rng, models.back()));
    }
    const std::span<const CategoricalModel> model_span(models);

    std::vector<Word> stream = RandomWords(rng, config.word_size, rng() % 12);
    const std::vector<Word> prefix = stream;
    auto frame = EncodeFramed(config, std::span<const Symbol>(message), model_span);
    bool ok = frame.ok();
    if (ok) {
      stream.insert(stream.end(), frame->begin(), frame->end());
      auto decoded = DecodeFramed(config, std::span<const Word>(stream), length, model_span);
      ok = decoded.ok() && decoded->message == message && decoded->prefix == prefix &&
           decoded->head == (Head{1} << config.word_size);
    }
    ++result.checks;
    if (!ok) ++result.failures;
  }
  report.suites.push_back(result);
}

}  // namespace

CategoricalModel RandomModel(std::mt19937_64& rng, std::uint32_t precision,
                             std::size_t max_alphabet) {
  const std::uint64_t n = std::uint64_t{1} << precision;
  const std::uint64_t limit = std::min<std::uint64_t>(max_alphabet, n);
  const std::size_t alphabet =
      std::uniform_int_distribution<std::uint64_t>(1, std::max<std::uint64_t>(limit, 1))(rng);
  std::vector<std::uint64_t> m(alphabet, 0);
  if (rng() % 3 == 0) {
    std::fill(m.begin(), m.end(), 1);
    m[rng() % alphabet] = n - (alphabet - 1);
  } else {
    std::vector<std::uint64_t> cuts(alphabet - 1);
    std::uniform_int_distribution<std::uint64_t> cut(0, n);
    for (auto& c : cuts) c = cut(rng);
    std::sort(cuts.begin(), cuts.end());
    std::uint64_t previous = 0;
    for (std::size_t i = 0; i + 1 < alphabet; ++i) {
      m[i] = cuts[i] - previous;
      previous = cuts[i];
    }
    m.back() = n - previous;
  }
  return *CategoricalModel::FromFrequencies(precision, m);
}

Symbol RandomSymbol(std::mt19937_64& rng, const CategoricalModel& model) {
  if (rng() % 2 == 0) {
    const std::uint64_t z = rng() & (model.total() - 1);
    return model.Locate(z).symbol;
  }
  std::vector<Symbol> encodable;
  for (Symbol x = 0; x < model.alphabet_size(); ++x) {
    if (model.frequency(x) != 0) encodable.push_back(x);
  }
  return encodable[rng() % encodable.size()];
}

std::vector<Word> RandomWords(std::mt19937_64& rng, std::uint32_t word_size,
                              std::size_t count) {
  const Word mask = word_size >= 64 ? ~Word{0} : (Word{1} << word_size) - 1;
  std::vector<Word> words(count);
  for (Word& w : words) w = rng() & mask;
  return words;
}

bool SelfTestReport::passed() const { return total_failures() == 0; }

std::size_t SelfTestReport::total_checks() const {
  std::size_t total = 0;
  for (const SuiteResult& suite : suites) total += suite.checks;
  return total;
}

std::size_t SelfTestReport::total_failures() const {
  std::size_t total = 0;
  for (const SuiteResult& suite : suites) total += suite.failures;
  return total;
}

SelfTestReport RunSelfTest(const SelfTestOptions& options) {
  std::mt19937_64 rng(options.seed);
  SelfTestReport report;
  const std::size_t trials = options.trials_per_config;
  for (const StreamingConfig& config : kPresetConfigs) {
    if (options.inject_flush_fault) {
      ScenarioSuites<FaultyFlushCoder>(config, trials, rng, report);
    } else {
      ScenarioSuites<AnsCoder>(config, trials, rng, report);
    }
    InvariantSuite(config, trials, rng, report);
  }
  ChainLocalitySuite(std::max<std::size_t>(trials / 2, 1), rng, report);
  FrameSuite(std::max<std::size_t>(trials / 25, 1), rng, report);
  return report;
}

void PrintReport(const SelfTestReport& report, std::ostream& out) {
  for (const SuiteResult& suite : report.suites) {
    out << (suite.failures == 0 ? "PASS " : "FAIL ") << std::left << std::setw(28)
        << suite.name << " checks=" << suite.checks << " failures=" << suite.failures << '\n';
  }
  out << (report.passed() ? "selftest passed" : "selftest FAILED") << ": "
      << report.total_checks() << " checks, " << report.total_failures() << " failures\n";
}

}  // namespace ans_stack::selftest
