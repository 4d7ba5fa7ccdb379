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

#ifndef ANS_STACK_MODEL_H_
#define ANS_STACK_MODEL_H_

#include <concepts>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ans_stack/config.h"
#include "ans_stack/error.h"

namespace ans_stack {

// Result of mapping a quantile z in {0, ..., n-1} back to its symbol.
struct Located {
  Symbol symbol;
  std::uint64_t offset;  // z - cdf[symbol]

  friend bool operator==(const Located&, const Located&) = default;
};

// The interval of quantiles {low, ..., low + freq - 1} owned by a symbol.
struct Interval {
  std::uint64_t low;
  std::uint64_t freq;

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Anything the coders can push to and pop from. `frequency` and `cumulative`
// are unchecked hot-path accessors; `Locate` requires z < 2^precision.
template <typename M>
concept EntropyModel = requires(const M& model, Symbol symbol, std::uint64_t z) {
  { model.precision() } -> std::convertible_to<std::uint32_t>;
  { model.alphabet_size() } -> std::convertible_to<std::size_t>;
  { model.frequency(symbol) } -> std::convertible_to<std::uint64_t>;
  { model.cumulative(symbol) } -> std::convertible_to<std::uint64_t>;
  { model.Locate(z) } -> std::same_as<Located>;
};

// A true (real-valued) categorical distribution over {0, ..., size-1}.
class RealModel {
 public:
  // Fails with kModelNotNormalized unless all entries are finite, nonnegative,
  // and sum to 1 within 1e-9.
  static Result<RealModel> Create(std::vector<double> probabilities);

  std::span<const double> probabilities() const { return probabilities_; }
  std::size_t alphabet_size() const { return probabilities_.size(); }
  double probability(Symbol symbol) const { return probabilities_[symbol]; }

 private:
  explicit RealModel(std::vector<double> p) : probabilities_(std::move(p)) {}
  std::vector<double> probabilities_;
};

// Fixed-point categorical model: integer frequencies m[x] that sum to
// n = 2^precision. Symbol x owns the quantiles {cdf[x], ..., cdf[x+1] - 1}.
class CategoricalModel {
 public:
  // Fails with kConfigInvalid for precision outside [1, 32] and with
  // kModelNotNormalized for an empty alphabet or sum(m) != 2^precision.
  static Result<CategoricalModel> FromFrequencies(
      std::uint32_t precision, std::span<const std::uint64_t> frequencies);

  std::uint32_t precision() const { return precision_; }
  std::uint64_t total() const { return std::uint64_t{1} << precision_; }
  std::size_t alphabet_size() const { return frequencies_.size(); }

  std::uint64_t frequency(Symbol symbol) const { return frequencies_[symbol]; }
  std::uint64_t cumulative(Symbol symbol) const { return cdf_[symbol]; }
  std::span<const std::uint64_t> frequencies() const { return frequencies_; }
  // alphabet_size() + 1 entries; cdf[0] = 0 and cdf.back() = n.
  std::span<const std::uint64_t> cdf() const { return cdf_; }

  // (cdf[symbol], m[symbol]); kSymbolOutOfRange past the alphabet.
  Result<Interval> LeftCumulative(Symbol symbol) const;

  // Binary search for the symbol whose interval contains z. Requires z < n.
  Located Locate(std::uint64_t z) const;

 private:
  CategoricalModel(std::uint32_t precision, std::vector<std::uint64_t> m,
                   std::vector<std::uint64_t> cdf)
      : precision_(precision), frequencies_(std::move(m)), cdf_(std::move(cdf)) {}

  std::uint32_t precision_;
  std::vector<std::uint64_t> frequencies_;
  std::vector<std::uint64_t> cdf_;
};

// CategoricalModel plus a table from every quantile to its symbol, so Locate
// is a single load. Only offered for precision <= kMaxLookupPrecision.
class LookupModel {
 public:
  static constexpr std::uint32_t kMaxLookupPrecision = 16;

  static Result<LookupModel> Build(const CategoricalModel& base);

  const CategoricalModel& base() const { return base_; }
  std::uint32_t precision() const { return base_.precision(); }
  std::size_t alphabet_size() const { return base_.alphabet_size(); }
  std::uint64_t frequency(Symbol symbol) const { return base_.frequency(symbol); }
  std::uint64_t cumulative(Symbol symbol) const { return base_.cumulative(symbol); }

  Located Locate(std::uint64_t z) const {
    const Symbol symbol = table_[z];
    return {symbol, z - base_.cumulative(symbol)};
  }

 private:
  LookupModel(CategoricalModel base, std::vector<Symbol> table)
      : base_(std::move(base)), table_(std::move(table)) {}

  CategoricalModel base_;
  std::vector<Symbol> table_;
};

static_assert(EntropyModel<CategoricalModel>);
static_assert(EntropyModel<LookupModel>);

// How decoders map a quantile back to its symbol.
enum class DecodeStrategy {
  kBinarySearch,  // CategoricalModel::Locate
  kLookupTable,   // LookupModel::Locate, precision <= 16 only
};

std::string_view DecodeStrategyName(DecodeStrategy strategy);

struct QuantizeOptions {
  // Give every symbol at least frequency 1, not only those with p > 0.
  bool floor_all_symbols = false;
};

// Rounds the real cumulative distribution (scaled by n = 2^precision) to the
// nearest integers (ties to even) and takes differences. Symbols that end up
// with frequency 0 but must be encodable are raised to 1; each unit comes from
// the currently largest slot. kModelNotNormalized if more than n symbols need
// a nonzero frequency, kConfigInvalid for precision outside [1, 32].
Result<CategoricalModel> Quantize(const RealModel& p, std::uint32_t precision,
                                  QuantizeOptions options = {});

// Shannon entropy in bits, with 0 log 0 = 0.
double Entropy(const RealModel& p);

// D_KL(p || q) in bits. kFrequencyZero if q gives zero mass to a symbol that
// p does not; kSymbolOutOfRange if the alphabets differ in size.
Result<double> KlDivergence(const RealModel& p, const CategoricalModel& q);

// precision - log2 m[symbol].
Result<double> InformationContent(const CategoricalModel& q, Symbol symbol);

}  // namespace ans_stack

#endif  // ANS_STACK_MODEL_H_
