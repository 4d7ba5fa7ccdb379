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

// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
// Usage: ans_stack_acceptance <path to ans-stack binary> <scratch directory>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ans_stack/ans_stack.h"
#include "ans_stack/tools/selftest.h"

namespace ans_stack {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

CategoricalModel Model(std::uint32_t precision, std::vector<std::uint64_t> m) {
  auto model = CategoricalModel::FromFrequencies(precision, m);
  if (!model.ok()) throw std::runtime_error(model.error().ToString());
  return *model;
}

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Format(const char* format, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), format, value);
  return buffer;
}

Verdict UniformGoldens() {
  Verdict v;
  UniformCoder digits;
  for (const std::uint64_t d : {3, 6, 5}) v.Require(digits.Push(d, 10).ok(), "push");
  v.Require(digits.number() == 365, "number != 365");
  v.Require(ToBinaryString(digits.number()) == "101101101", "binary of 365");

  UniformCoder mixed;
  v.Require(mixed.Push(3, 10).ok() && mixed.Push(6, 10).ok() && mixed.Push(12, 15).ok() &&
                mixed.Push(4, 15).ok(),
            "push");
  v.Require(ToBinaryString(mixed.number()) == "10000001011100",
            "mixed bases gave " + ToBinaryString(mixed.number()));
  v.detail = v.pass ? "365 = 101101101, (3,6,12,4) = 10000001011100" : v.detail;
  return v;
}

Verdict DemoRoundtrip() {
  Verdict v;
  const CategoricalModel model = Model(4, {7, 3, 6});
  const std::vector<Symbol> message = {2, 0, 2, 1, 0};

  SlowAnsCoder slow(4);
  for (auto it = message.rbegin(); it != message.rend(); ++it) {
    v.Require(slow.Push(*it, model).ok(), "slow push");
  }
  std::vector<Symbol> slow_decoded;
  for (std::size_t i = 0; i < message.size(); ++i) slow_decoded.push_back(*slow.Pop(model));
  v.Require(slow_decoded == message, "big-integer coder roundtrip");

  AnsCoder encoder = *AnsCoder::Create({4, 4, 8});
  for (auto it = message.rbegin(); it != message.rend(); ++it) {
    v.Require(encoder.Push(*it, model).ok(), "streaming push");
  }
  AnsCoder decoder = *AnsCoder::Create({4, 4, 8}, encoder.GetCompressed());
  std::vector<Symbol> decoded;
  for (std::size_t i = 0; i < message.size(); ++i) decoded.push_back(*decoder.Pop(model));
  v.Require(decoded == message, "streaming coder roundtrip");
  v.Require(decoder.empty(), "streaming decoder not back to empty");
  if (v.pass) v.detail = "[2,0,2,1,0] on big-integer and 4/4/8 streaming coders";
  return v;
}

std::string Join(const std::vector<Symbol>& symbols) {
  std::string out = "[";
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    out += (i ? "," : "") + std::to_string(symbols[i]);
  }
  return out + "]";
}

std::pair<std::vector<Symbol>, std::vector<Symbol>> NonLocalCases() {
  const std::vector<Word> words = {9, 14, 6, 14};
  const CategoricalModel m_orig = Model(4, {7, 3, 6});
  const CategoricalModel m_mod = Model(4, {6, 4, 6});
  AnsCoder first = *AnsCoder::Create({4, 4, 8}, words);
  std::vector<Symbol> case1;
  for (int i = 0; i < 4; ++i) case1.push_back(*first.Pop(m_orig));
  AnsCoder second = *AnsCoder::Create({4, 4, 8}, words);
  std::vector<Symbol> case2 = {*second.Pop(m_mod)};
  for (int i = 0; i < 3; ++i) case2.push_back(*second.Pop(m_orig));
  return {case1, case2};
}

Verdict NonLocalGoldens() {
  Verdict v;
  const auto [case1, case2] = NonLocalCases();
  v.Require(case1 == std::vector<Symbol>{0, 1, 0, 2}, "case1 = " + Join(case1));
  v.Require(case2 == std::vector<Symbol>{1, 1, 2, 0}, "case2 = " + Join(case2));
  if (v.pass) v.detail = "case1 = " + Join(case1) + ", case2 = " + Join(case2);
  return v;
}

Verdict PropertySuite() {
  Verdict v;
  const auto start = Clock::now();
  selftest::SelfTestOptions options;
  options.trials_per_config = 25'000;
  const selftest::SelfTestReport report = selftest::RunSelfTest(options);
  const double elapsed = Seconds(start);

  std::size_t scenario_a = 0;
  std::size_t scenario_b = 0;
  std::size_t invariants = 0;
  std::size_t configs = 0;
  for (const selftest::SuiteResult& suite : report.suites) {
    if (suite.name.rfind("scenario_a", 0) == 0) {
      scenario_a += suite.checks;
      ++configs;
    }
    if (suite.name.rfind("scenario_b", 0) == 0) scenario_b += suite.checks;
    if (suite.name.rfind("invariants", 0) == 0) invariants += suite.checks;
    v.Require(suite.failures == 0, suite.name + " failures=" + std::to_string(suite.failures));
  }
  v.Require(configs == kPresetConfigs.size(), "not every preset config was exercised");
  v.Require(scenario_a >= 100'000 && scenario_b >= 100'000, "fewer than 1e5 trials");
  v.Require(elapsed < 60.0, "took " + Format("%.1f s", elapsed));
  if (v.pass) {
    v.detail = std::to_string(scenario_a) + " (a) + " + std::to_string(scenario_b) + " (b) + " +
               std::to_string(invariants) + " invariant trials over 4 presets, 0 failures, " +
               Format("%.1f s", elapsed);
  }
  return v;
}

Verdict SeekScenario() {
  Verdict v;
  const CategoricalModel model = Model(4, {7, 3, 6});
  const std::vector<Symbol> message = {2, 0, 2, 1, 0, 1, 2, 2, 2, 1,
                                       0, 2, 1, 2, 0, 0, 1, 1, 1, 2};
  AnsCoder coder = *AnsCoder::Create({4, 4, 8});
  for (std::size_t i = 20; i-- > 10;) v.Require(coder.Push(message[i], model).ok(), "push");
  const Checkpoint checkpoint = coder.MakeCheckpoint();
  for (std::size_t i = 10; i-- > 0;) v.Require(coder.Push(message[i], model).ok(), "push");
  v.Require(*coder.Pop(model) == message[0], "first symbol");
  v.Require(*coder.Pop(model) == message[1], "second symbol");
  v.Require(coder.Seek(checkpoint).ok(), "seek failed");
  std::vector<Symbol> rest;
  for (int i = 0; i < 10; ++i) rest.push_back(*coder.Pop(model));
  const std::vector<Symbol> expected(message.begin() + 10, message.end());
  v.Require(rest == expected, "decoded " + Join(rest));
  if (v.pass) v.detail = "symbols 11-20 = " + Join(rest);
  return v;
}

Verdict ChainLocality() {
  Verdict v;
  std::mt19937_64 rng(20260102);
  constexpr int kTrials = 10'000;
  int violations = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const std::uint32_t precision = 1 + static_cast<std::uint32_t>(rng() % 32);
    const std::vector<Word> words = selftest::RandomWords(rng, precision, 1 + rng() % 32);
    std::vector<CategoricalModel> models;
    for (std::size_t i = 0; i < words.size(); ++i) {
      models.push_back(selftest::RandomModel(rng, precision, 64));
    }
    auto decode = [&](const std::vector<CategoricalModel>& ms) {
      ChainCoder coder = *ChainCoder::Create(precision, words);
      std::vector<Symbol> out;
      for (const CategoricalModel& m : ms) out.push_back(*coder.Pop(m));
      return out;
    };
    const std::vector<Symbol> reference = decode(models);
    const std::size_t j = rng() % words.size();
    models[j] = selftest::RandomModel(rng, precision, 64);
    const std::vector<Symbol> perturbed = decode(models);
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (i != j && perturbed[i] != reference[i]) {
        ++violations;
        break;
      }
    }
  }
  v.Require(violations == 0, std::to_string(violations) + " trials changed another symbol");

  const auto [case1, case2] = NonLocalCases();
  const bool later_changed = !std::equal(case1.begin() + 1, case1.end(), case2.begin() + 1);
  v.Require(later_changed, "streaming coder witness shows no non-local change");
  if (v.pass) {
    v.detail = std::to_string(kTrials) +
               " perturbation trials, 0 violations; streaming witness changes later symbols";
  }
  return v;
}

struct BitrateRows {
  std::vector<std::pair<Corpus, BenchRow>> sweep;  // per (entropy, config), seed 0
  std::vector<std::pair<Corpus, BenchRow>> seeds;  // mid entropy, 20 seeds x 3 configs
};

const std::vector<StreamingConfig> kOrdered = {kDefaultConfig, kSimple16Config, kSmallConfig};
constexpr double kMidEntropy = 4.0;

BitrateRows MeasureBitrates() {
  BitrateRows rows;
  for (const double entropy : {0.1, 0.5, 1.0, 4.0, 8.0}) {
    auto corpus = MakeCorpus(0, entropy, 1'000'000, 256);
    if (!corpus.ok()) throw std::runtime_error(corpus.error().ToString());
    for (const StreamingConfig& config : kOrdered) {
      auto row = RunBench(*corpus, config, DecodeStrategy::kBinarySearch, 1);
      if (!row.ok()) throw std::runtime_error(row.error().ToString());
      rows.sweep.emplace_back(*corpus, *row);
    }
  }
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto corpus = MakeCorpus(seed, kMidEntropy, 1'000'000, 256);
    if (!corpus.ok()) throw std::runtime_error(corpus.error().ToString());
    for (const StreamingConfig& config : kOrdered) {
      auto row = RunBench(*corpus, config, DecodeStrategy::kBinarySearch, 1);
      if (!row.ok()) throw std::runtime_error(row.error().ToString());
      rows.seeds.emplace_back(*corpus, *row);
    }
  }
  return rows;
}

Verdict BitrateOverhead(const BitrateRows& rows, double elapsed) {
  Verdict v;
  double worst = 0.0;
  for (const auto& [corpus, row] : rows.sweep) {
    if (row.config != kDefaultConfig) continue;
    worst = std::max(worst, row.total_overhead_percent);
    v.Require(row.total_overhead_percent < 0.1,
              "default total overhead " + Format("%.5f%%", row.total_overhead_percent) +
                  " at entropy " + Format("%.3g", row.entropy_bits_per_symbol));
  }
  std::vector<double> mean(kOrdered.size(), 0.0);
  for (const auto& [corpus, row] : rows.seeds) {
    for (std::size_t c = 0; c < kOrdered.size(); ++c) {
      if (row.config == kOrdered[c]) mean[c] += row.total_overhead_percent / 20.0;
    }
  }
  v.Require(mean[0] < mean[1] && mean[1] < mean[2],
            "ordering violated: " + Format("%.5f", mean[0]) + ", " + Format("%.5f", mean[1]) +
                ", " + Format("%.5f", mean[2]));
  v.Require(elapsed < 300.0, "took " + Format("%.1f s", elapsed));
  if (v.pass) {
    v.detail = "default worst " + Format("%.5f%%", worst) + "; mean over 20 seeds at " +
               Format("%.0f", kMidEntropy) + " bits: " + Format("%.5f%%", mean[0]) + " < " +
               Format("%.5f%%", mean[1]) + " < " + Format("%.5f%%", mean[2]) + ", " +
               Format("%.1f s", elapsed);
  }
  return v;
}

// 100 * D_KL(P || Q) / H(P), summed in 50 significant digits.
double KlPercentOracle(const RealModel& p, const CategoricalModel& q) {
  using HighPrecision = boost::multiprecision::cpp_bin_float_50;
  const HighPrecision ln2 = log(HighPrecision(2));
  const HighPrecision n = HighPrecision(q.total());
  HighPrecision kl = 0;
  HighPrecision entropy = 0;
  for (Symbol x = 0; x < p.alphabet_size(); ++x) {
    const HighPrecision px = p.probability(x);
    if (px == 0) continue;
    kl += px * log(px * n / HighPrecision(q.frequency(x))) / ln2;
    entropy -= px * log(px) / ln2;
  }
  return static_cast<double>(100 * kl / entropy);
}

Verdict KlDecomposition(const BitrateRows& rows) {
  Verdict v;
  double worst_relative = 0.0;
  int below = 0;
  int total_rows = 0;
  std::string first_below;
  for (const auto* set : {&rows.sweep, &rows.seeds}) {
    for (const auto& [corpus, row] : *set) {
      ++total_rows;
      const double oracle = KlPercentOracle(corpus.model, *Quantize(corpus.model,
                                                                    row.config.precision));
      const double relative =
          oracle == 0.0 ? std::fabs(row.kl_overhead_percent)
                        : std::fabs(row.kl_overhead_percent - oracle) / oracle;
      worst_relative = std::max(worst_relative, relative);
      if (row.total_overhead_percent < row.kl_overhead_percent) {
        if (below++ == 0) {
          first_below = row.config.ToString() + " at " +
                        Format("%.3g", row.entropy_bits_per_symbol) + " bits: total " +
                        Format("%.6f%%", row.total_overhead_percent) + " < kl " +
                        Format("%.6f%%", row.kl_overhead_percent);
        }
      }
    }
  }
  v.Require(worst_relative <= 1e-9, "kl relative error " + Format("%.3g", worst_relative));
  v.Require(below == 0, std::to_string(below) + " of " + std::to_string(total_rows) +
                            " rows have total < kl (first: " + first_below + ")");
  if (v.pass) {
    v.detail = std::to_string(total_rows) + " rows, kl relative error <= " +
               Format("%.2g", worst_relative) + ", total >= kl everywhere";
  }
  return v;
}

Verdict FramingSentinel() {
  Verdict v;
  std::mt19937_64 rng(20260103);
  int checked = 0;
  for (const StreamingConfig config : {StreamingConfig{4, 4, 8}, kSimple16Config,
                                       kSimple32Config}) {
    const Head n = Head{1} << config.precision;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<CategoricalModel> models;
      std::vector<Symbol> message(1 + rng() % 100);
      for (Symbol& s : message) {
        models.push_back(selftest::RandomModel(rng, config.precision, 64));
        s = selftest::RandomSymbol(rng, models.back());
      }
      std::vector<Word> stream = selftest::RandomWords(rng, config.word_size, rng() % 16);
      const std::vector<Word> prefix = stream;
      auto frame = EncodeFramed(config, std::span<const Symbol>(message),
                                std::span<const CategoricalModel>(models));
      if (!frame.ok()) {
        v.Require(false, frame.error().ToString());
        return v;
      }
      stream.insert(stream.end(), frame->begin(), frame->end());
      auto decoded = DecodeFramed(config, std::span<const Word>(stream), message.size(),
                                  std::span<const CategoricalModel>(models));
      const bool ok = decoded.ok() && decoded->message == message &&
                      decoded->prefix == prefix && decoded->head == n;
      v.Require(ok, "prefix not recovered for " + config.ToString() + " trial " +
                        std::to_string(trial));
      ++checked;
      if (!ok) return v;
    }
  }
  if (v.pass) {
    v.detail = std::to_string(checked) +
               " random prefixes over 4/4/8, 16/16/32, 32/32/64: bulk = prefix, head = n";
  }
  return v;
}

std::vector<std::uint8_t> ReadAll(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void WriteAll(const fs::path& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
}

Verdict CliEndToEnd(const std::string& binary, const fs::path& work) {
  Verdict v;
  fs::remove_all(work);
  fs::create_directories(work);
  std::mt19937_64 rng(20260104);

  std::vector<std::pair<std::string, std::vector<std::uint8_t>>> files;
  files.emplace_back("empty.bin", std::vector<std::uint8_t>{});
  files.emplace_back("zeros.bin", std::vector<std::uint8_t>(10'000'000, 0));
  std::vector<std::uint8_t> random(10'000'000);
  for (std::uint8_t& b : random) b = static_cast<std::uint8_t>(rng());
  files.emplace_back("random.bin", std::move(random));
  std::vector<std::uint8_t> text;
  {
    const std::vector<std::string> words = {"entropy", "coder", "stack", "the", "a", "of",
                                            "model",   "bits",  "word",  "head", "and", "is"};
    std::geometric_distribution<int> pick(0.25);
    while (text.size() < 4'000'000) {
      const std::string& w = words[std::min<std::size_t>(pick(rng), words.size() - 1)];
      text.insert(text.end(), w.begin(), w.end());
      text.push_back(rng() % 13 == 0 ? '\n' : ' ');
    }
  }
  files.emplace_back("text.txt", std::move(text));

  // Skewed i.i.d. bytes with P(x) proportional to 0.7^x.
  std::vector<double> p(256);
  double sum = 0.0;
  for (int x = 0; x < 256; ++x) sum += p[x] = std::pow(0.7, x);
  for (double& value : p) value /= sum;
  std::discrete_distribution<int> skew(p.begin(), p.end());
  std::vector<std::uint8_t> skewed(1'000'000);
  long double information = 0.0L;
  for (std::uint8_t& b : skewed) {
    b = static_cast<std::uint8_t>(skew(rng));
    information -= std::log2l(p[b]);
  }
  files.emplace_back("skewed.bin", std::move(skewed));

  std::size_t largest = 0;
  for (const auto& [name, data] : files) {
    largest = std::max(largest, data.size());
    const fs::path input = work / name;
    const fs::path packed = work / (name + ".ans");
    const fs::path restored = work / (name + ".restored");
    WriteAll(input, data);
    const std::string encode = "\"" + binary + "\" encode \"" + input.string() + "\" -o \"" +
                               packed.string() + "\"";
    const std::string decode = "\"" + binary + "\" decode \"" + packed.string() + "\" -o \"" +
                               restored.string() + "\"";
    if (std::system(encode.c_str()) != 0 || std::system(decode.c_str()) != 0) {
      v.Require(false, name + ": command failed");
      continue;
    }
    v.Require(ReadAll(restored) == data, name + ": roundtrip differs");
    if (name == "skewed.bin") {
      const double header = static_cast<double>(kFixedHeaderBytes + 4 * 256);
      const double payload = static_cast<double>(fs::file_size(packed)) - header;
      const double ideal = static_cast<double>(information) / 8.0;
      v.Require(payload <= 1.001 * ideal,
                "skewed payload " + Format("%.0f", payload) + " B > 1.001 * " +
                    Format("%.1f", ideal) + " B");
      if (v.pass) {
        v.detail = "skewed: " + Format("%.0f", payload) + " B payload vs " +
                   Format("%.1f", ideal) + " B information content (" +
                   Format("%+.4f%%", 100.0 * (payload - ideal) / ideal) + ")";
      }
    }
  }
  if (v.pass) {
    v.detail = std::to_string(files.size()) + " files up to " + std::to_string(largest) +
               " B byte-identical; " + v.detail;
  }
  fs::remove_all(work);
  return v;
}

}  // namespace
}  // namespace ans_stack

int main(int argc, char** argv) {
  using ans_stack::Verdict;
  if (argc != 3) {
    std::cerr << "usage: " << argv[0] << " <ans-stack binary> <scratch directory>\n";
    return 2;
  }
  const std::string binary = argv[1];
  const std::filesystem::path work = argv[2];

  std::optional<ans_stack::BitrateRows> rows;
  double bitrate_seconds = 0.0;
  auto bitrates = [&]() -> const ans_stack::BitrateRows& {
    if (!rows) {
      const auto start = ans_stack::Clock::now();
      rows = ans_stack::MeasureBitrates();
      bitrate_seconds = ans_stack::Seconds(start);
    }
    return *rows;
  };

  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"uniform coder goldens", ans_stack::UniformGoldens},
      {"demo message roundtrip", ans_stack::DemoRoundtrip},
      {"non-local decoding goldens", ans_stack::NonLocalGoldens},
      {"push/pop property suite", ans_stack::PropertySuite},
      {"checkpoint seek", ans_stack::SeekScenario},
      {"chain coder locality", ans_stack::ChainLocality},
      {"bitrate overhead",
       [&] {
         const auto& r = bitrates();
         return ans_stack::BitrateOverhead(r, bitrate_seconds);
       }},
      {"kl decomposition", [&] { return ans_stack::KlDecomposition(bitrates()); }},
      {"framing sentinel", ans_stack::FramingSentinel},
      {"cli end to end", [&] { return ans_stack::CliEndToEnd(binary, work); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict verdict;
    try {
      verdict = criteria[i].second();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    failures += verdict.pass ? 0 : 1;
    std::cout << (verdict.pass ? "PASS" : "FAIL") << " " << (i + 1) << " "
              << criteria[i].first << ": " << verdict.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
