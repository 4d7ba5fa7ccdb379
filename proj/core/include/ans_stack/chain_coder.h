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

#ifndef ANS_STACK_CHAIN_CODER_H_
#define ANS_STACK_CHAIN_CODER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ans_stack/config.h"
#include "ans_stack/error.h"
#include "ans_stack/model.h"

namespace ans_stack {

// ANS variant with separate stacks for reading and writing. Pop always reads
// one full precision-bit word from `compressed` and writes the model-dependent
// remainder onto `remainders`, so changing the model used for one Pop cannot
// change any other decoded symbol.
//
// Uses word_size = precision and a 2 * precision bit remainders head:
//   (i)  remainders_head < 2^(2 * precision)
//   (ii) remainders_head >= 2^precision whenever remainders is nonempty
class ChainCoder {
 public:
  // Rebuilds the coder from the two word sequences returned by Finalize.
  // `compressed` is validated lazily on Pop; `remainders` here.
  static Result<ChainCoder> Create(std::uint32_t precision,
                                   std::span<const Word> compressed,
                                   std::span<const Word> remainders = {});

  // kInsufficientData if compressed is empty; kWordOutOfRange if the word
  // read is not below 2^precision.
  template <EntropyModel M>
  Result<Symbol> Pop(const M& model);

  // Exact inverse of Pop.
  template <EntropyModel M>
  Status Push(Symbol symbol, const M& model);

  struct Parts {
    std::vector<Word> compressed;
    std::vector<Word> remainders;  // remainders_head appended, low word first

    friend bool operator==(const Parts&, const Parts&) = default;
  };
  Parts Finalize() const;

  std::uint32_t precision() const { return precision_; }
  std::span<const Word> compressed() const { return compressed_; }
  std::span<const Word> remainders() const { return remainders_; }
  Head remainders_head() const { return remainders_head_; }

  bool InvariantsHold() const;

  friend bool operator==(const ChainCoder&, const ChainCoder&) = default;

 private:
  explicit ChainCoder(std::uint32_t precision) : precision_(precision) {}

  Status CheckModel(std::uint32_t model_precision) const;

  std::uint32_t precision_;
  std::vector<Word> compressed_;
  std::vector<Word> remainders_;
  Head remainders_head_ = 0;
};

template <EntropyModel M>
Result<Symbol> ChainCoder::Pop(const M& model) {
  ANS_STACK_RETURN_IF_ERROR(CheckModel(model.precision()));
  if (compressed_.empty()) {
    return MakeError(ErrorKind::kInsufficientData, "no compressed words left to pop");
  }
  const Word z = compressed_.back();
  if ((z >> precision_) != 0) {
    return MakeError(ErrorKind::kWordOutOfRange,
                     "compressed word " + std::to_string(z) + " exceeds " +
                         std::to_string(precision_) + " bits");
  }
  compressed_.pop_back();

  const Located located = model.Locate(z);
  remainders_head_ = remainders_head_ * model.frequency(located.symbol) + located.offset;
  if ((remainders_head_ >> (2 * precision_)) != 0) {
    remainders_.push_back(static_cast<Word>(remainders_head_) &
                          ((Word{1} << precision_) - 1));
    remainders_head_ >>= precision_;
  }
  return located.symbol;
}

template <EntropyModel M>
Status ChainCoder::Push(Symbol symbol, const M& model) {
  ANS_STACK_RETURN_IF_ERROR(CheckModel(model.precision()));
  if (symbol >= model.alphabet_size()) {
    return MakeError(ErrorKind::kSymbolOutOfRange,
                     "symbol " + std::to_string(symbol) + " outside alphabet of size " +
                         std::to_string(model.alphabet_size()));
  }
  const std::uint64_t freq = model.frequency(symbol);
  if (freq == 0) {
    return MakeError(ErrorKind::kFrequencyZero,
                     "cannot encode symbol " + std::to_string(symbol) +
                         " with zero frequency");
  }
  if (!remainders_.empty() && remainders_head_ < (Head{freq} << precision_)) {
    remainders_head_ = (remainders_head_ << precision_) | remainders_.back();
    remainders_.pop_back();
    // (i) is broken here until the division below.
  }
  const Head quotient = remainders_head_ / freq;
  const auto remainder = static_cast<std::uint64_t>(remainders_head_ - quotient * freq);
  remainders_head_ = quotient;
  compressed_.push_back(remainder + model.cumulative(symbol));
  return OkStatus();
}

}  // namespace ans_stack

#endif  // ANS_STACK_CHAIN_CODER_H_
