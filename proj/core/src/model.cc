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

#include "ans_stack/model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

namespace ans_stack {

namespace {

Status CheckPrecision(std::uint32_t precision) {
  if (precision < 1 || precision > kMaxPrecision) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "model precision " + std::to_string(precision) +
                         " outside [1, " + std::to_string(kMaxPrecision) + "]");
  }
  return OkStatus();
}

}  // namespace

std::string_view DecodeStrategyName(DecodeStrategy strategy) {
  switch (strategy) {
    case DecodeStrategy::kBinarySearch:
      return "binary";
    case DecodeStrategy::kLookupTable:
      return "lookup";
  }
  return "unknown";
}

Result<RealModel> RealModel::Create(std::vector<double> probabilities) {
  if (probabilities.empty()) {
    return MakeError(ErrorKind::kModelNotNormalized, "empty probability vector");
  }
  long double sum = 0.0L;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!std::isfinite(p) || p < 0.0) {
      return MakeError(ErrorKind::kModelNotNormalized,
                       "probability " + std::to_string(i) + " is negative or not finite");
    }
    sum += p;
  }
  if (std::fabs(static_cast<double>(sum) - 1.0) > 1e-9) {
    return MakeError(ErrorKind::kModelNotNormalized,
                     "probabilities sum to " + std::to_string(static_cast<double>(sum)));
  }
  return RealModel(std::move(probabilities));
}

Result<CategoricalModel> CategoricalModel::FromFrequencies(
    std::uint32_t precision, std::span<const std::uint64_t> frequencies) {
  ANS_STACK_RETURN_IF_ERROR(CheckPrecision(precision));
  if (frequencies.empty()) {
    return MakeError(ErrorKind::kModelNotNormalized, "empty alphabet");
  }
  const std::uint64_t n = std::uint64_t{1} << precision;
  std::vector<std::uint64_t> cdf(frequencies.size() + 1, 0);
  for (std::size_t i = 0; i < frequencies.size(); ++i) {
    if (frequencies[i] > n - cdf[i]) {
      return MakeError(ErrorKind::kModelNotNormalized,
                       "frequencies exceed 2^" + std::to_string(precision));
    }
    cdf[i + 1] = cdf[i] + frequencies[i];
  }
  if (cdf.back() != n) {
    return MakeError(ErrorKind::kModelNotNormalized,
                     "frequencies sum to " + std::to_string(cdf.back()) + ", expected 2^" +
                         std::to_string(precision));
  }
  return CategoricalModel(precision, {frequencies.begin(), frequencies.end()},
                          std::move(cdf));
}

Result<Interval> CategoricalModel::LeftCumulative(Symbol symbol) const {
  if (symbol >= alphabet_size()) {
    return MakeError(ErrorKind::kSymbolOutOfRange,
                     "symbol " + std::to_string(symbol) + " outside alphabet of size " +
                         std::to_string(alphabet_size()));
  }
  return Interval{cdf_[symbol], frequencies_[symbol]};
}

Located CategoricalModel::Locate(std::uint64_t z) const {
  // First x with cdf[x + 1] > z; zero-frequency symbols are skipped naturally.
  const auto it = std::upper_bound(cdf_.begin() + 1, cdf_.end(), z);
  const auto symbol = static_cast<Symbol>(it - (cdf_.begin() + 1));
  return {symbol, z - cdf_[symbol]};
}

Result<LookupModel> LookupModel::Build(const CategoricalModel& base) {
  if (base.precision() > kMaxLookupPrecision) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "lookup tables need precision <= " +
                         std::to_string(kMaxLookupPrecision) + ", got " +
                         std::to_string(base.precision()));
  }
  std::vector<Symbol> table(base.total());
  for (Symbol x = 0; x < base.alphabet_size(); ++x) {
    std::fill(table.begin() + static_cast<std::ptrdiff_t>(base.cumulative(x)),
              table.begin() + static_cast<std::ptrdiff_t>(base.cumulative(x + 1)), x);
  }
  return LookupModel(base, std::move(table));
}

Result<CategoricalModel> Quantize(const RealModel& p, std::uint32_t precision,
                                  QuantizeOptions options) {
  ANS_STACK_RETURN_IF_ERROR(CheckPrecision(precision));
  const std::uint64_t n = std::uint64_t{1} << precision;
  const std::size_t size = p.alphabet_size();

  auto needs_mass = [&](std::size_t x) {
    return options.floor_all_symbols || p.probability(static_cast<Symbol>(x)) > 0.0;
  };
  std::uint64_t required = 0;
  for (std::size_t x = 0; x < size; ++x) required += needs_mass(x) ? 1 : 0;
  if (required > n) {
    return MakeError(ErrorKind::kModelNotNormalized,
                     std::to_string(required) + " symbols need nonzero frequency but only " +
                         std::to_string(n) + " quantiles exist");
  }

  // Round the scaled cumulative distribution; nearbyint rounds ties to even.
  std::vector<std::uint64_t> frequencies(size);
  long double cumulative = 0.0L;
  std::uint64_t previous = 0;
  for (std::size_t x = 0; x < size; ++x) {
    cumulative += p.probability(static_cast<Symbol>(x));
    std::uint64_t edge = n;
    if (x + 1 < size) {
      const long double scaled = std::nearbyintl(cumulative * static_cast<long double>(n));
      edge = static_cast<std::uint64_t>(
          std::clamp(scaled, static_cast<long double>(previous), static_cast<long double>(n)));
    }
    frequencies[x] = edge - previous;
    previous = edge;
  }

  std::priority_queue<std::pair<std::uint64_t, std::size_t>> largest;
  for (std::size_t x = 0; x < size; ++x) {
    if (frequencies[x] > 1) largest.emplace(frequencies[x], x);
  }
  for (std::size_t x = 0; x < size; ++x) {
    if (frequencies[x] != 0 || !needs_mass(x)) continue;
    // Nonempty: required <= n guarantees some slot still holds >= 2.
    auto [freq, donor] = largest.top();
    largest.pop();
    frequencies[donor] = freq - 1;
    if (freq - 1 > 1) largest.emplace(freq - 1, donor);
    frequencies[x] = 1;
  }
  return CategoricalModel::FromFrequencies(precision, frequencies);
}

double Entropy(const RealModel& p) {
  long double sum = 0.0L;
  for (const double prob : p.probabilities()) {
    if (prob > 0.0) sum -= prob * std::log2l(prob);
  }
  return static_cast<double>(sum);
}

Result<double> KlDivergence(const RealModel& p, const CategoricalModel& q) {
  if (p.alphabet_size() != q.alphabet_size()) {
    return MakeError(ErrorKind::kSymbolOutOfRange,
                     "alphabet sizes differ: " + std::to_string(p.alphabet_size()) +
                         " vs " + std::to_string(q.alphabet_size()));
  }
  const long double n = static_cast<long double>(q.total());
  long double sum = 0.0L;
  for (Symbol x = 0; x < p.alphabet_size(); ++x) {
    const long double prob = p.probability(x);
    if (prob == 0.0L) continue;
    if (q.frequency(x) == 0) {
      return MakeError(ErrorKind::kFrequencyZero,
                       "symbol " + std::to_string(x) +
                           " has positive probability but zero frequency");
    }
    sum += prob * std::log2l(prob * n / static_cast<long double>(q.frequency(x)));
  }
  return static_cast<double>(sum);
}

Result<double> InformationContent(const CategoricalModel& q, Symbol symbol) {
  auto interval = q.LeftCumulative(symbol);
  if (!interval.ok()) return interval.error();
  if (interval->freq == 0) {
    return MakeError(ErrorKind::kFrequencyZero,
                     "symbol " + std::to_string(symbol) + " has zero frequency");
  }
  return static_cast<double>(q.precision()) -
         std::log2(static_cast<double>(interval->freq));
}

}  // namespace ans_stack
