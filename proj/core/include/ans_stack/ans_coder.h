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

#ifndef ANS_STACK_ANS_CODER_H_
#define ANS_STACK_ANS_CODER_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ans_stack/config.h"
#include "ans_stack/error.h"
#include "ans_stack/model.h"

namespace ans_stack {

// Decoder position that Seek can return to: the bulk length and head at the
// time it was taken.
struct Checkpoint {
  std::size_t bulk_len = 0;
  Head head = 0;

  friend bool operator==(const Checkpoint&, const Checkpoint&) = default;
};

// Streaming ANS coder with stack semantics. Encoding (Push) and decoding (Pop)
// operate on the same state: a growable `bulk` of words and a bounded `head`.
// Between public calls the state satisfies
//
//   (i')  head < 2^head_capacity
//   (ii') head >= 2^(head_capacity - word_size) whenever bulk is nonempty
//
// Push moves the least significant word of head to bulk exactly when encoding
// directly onto head would break (i'); Pop moves a word back exactly when the
// decoded head breaks (ii'). This pairing is what makes Pop the inverse of Push.
class AnsCoder {
 public:
  // Copies `compressed` into bulk and pulls words from its end into head until
  // (ii') holds. kWordOutOfRange if a word has bits above word_size.
  static Result<AnsCoder> Create(const StreamingConfig& config,
                                 std::span<const Word> compressed = {});

  // Like Create, but appends a sentinel word 1 so that data ending in zero
  // words survives; GetBinary strips it again.
  static Result<AnsCoder> FromBinary(const StreamingConfig& config,
                                     std::span<const Word> data);

  template <EntropyModel M>
  Status Push(Symbol symbol, const M& model);

  template <EntropyModel M>
  Result<Symbol> Pop(const M& model);

  // bulk followed by head split into word_size chunks (least significant
  // first), without leading zero chunks. Does not modify the coder.
  std::vector<Word> GetCompressed() const;

  // Inverse of FromBinary. kInsufficientData if the top word is not the
  // sentinel, i.e. the coder is not back at a FromBinary state.
  Result<std::vector<Word>> GetBinary() const;

  Checkpoint MakeCheckpoint() const { return {bulk_.size(), head_}; }

  // Truncates bulk and restores head. Only positions at or below the current
  // bulk length are reachable (kSeekForwardOnly otherwise), since decoding
  // consumes bulk.
  Status Seek(const Checkpoint& checkpoint);

  const StreamingConfig& config() const { return config_; }
  std::span<const Word> bulk() const { return bulk_; }
  Head head() const { return head_; }
  bool empty() const { return bulk_.empty() && head_ == 0; }

  // Number of bits GetCompressed() would return.
  std::size_t CompressedBits() const;

  bool InvariantsHold() const;

  friend bool operator==(const AnsCoder&, const AnsCoder&) = default;

 private:
  explicit AnsCoder(const StreamingConfig& config);

  Status CheckModel(std::uint32_t model_precision, std::size_t alphabet_size,
                    Symbol symbol) const;
  Error PrecisionMismatch(std::uint32_t model_precision) const;

  StreamingConfig config_;
  std::uint32_t flush_shift_;  // head_capacity - precision
  Head refill_threshold_;      // 2^(head_capacity - word_size)
  Word word_mask_;
  std::uint64_t quantile_mask_;
  std::vector<Word> bulk_;
  Head head_ = 0;
};

template <EntropyModel M>
Status AnsCoder::Push(Symbol symbol, const M& model) {
  if (model.precision() != config_.precision || symbol >= model.alphabet_size()) {
    return CheckModel(model.precision(), model.alphabet_size(), symbol);
  }
  const std::uint64_t freq = model.frequency(symbol);
  if (freq == 0) {
    return MakeError(ErrorKind::kFrequencyZero,
                     "cannot encode symbol " + std::to_string(symbol) +
                         " with zero frequency");
  }

  // head / freq must stay below 2^(head_capacity - precision) for (i').
  if ((head_ >> flush_shift_) >= freq) {
    bulk_.push_back(static_cast<Word>(head_) & word_mask_);
    head_ >>= config_.word_size;
  }

  const std::uint64_t low = model.cumulative(symbol);
  if (head_ <= std::numeric_limits<std::uint64_t>::max()) {
    const auto head64 = static_cast<std::uint64_t>(head_);
    const std::uint64_t quotient = head64 / freq;
    const std::uint64_t remainder = head64 % freq;
    head_ = (Head{quotient} << config_.precision) | (remainder + low);
  } else {
    const Head quotient = head_ / freq;
    const auto remainder = static_cast<std::uint64_t>(head_ - quotient * freq);
    head_ = (quotient << config_.precision) | (remainder + low);
  }
  return OkStatus();
}

template <EntropyModel M>
Result<Symbol> AnsCoder::Pop(const M& model) {
  if (model.precision() != config_.precision) {
    return PrecisionMismatch(model.precision());
  }
  const std::uint64_t z = static_cast<std::uint64_t>(head_) & quantile_mask_;
  head_ >>= config_.precision;
  const Located located = model.Locate(z);
  head_ = head_ * model.frequency(located.symbol) + located.offset;

  // The matching Push flushed here iff (ii') is now broken.
  if (head_ < refill_threshold_ && !bulk_.empty()) {
    head_ = (head_ << config_.word_size) | bulk_.back();
    bulk_.pop_back();
  }
  return located.symbol;
}

}  // namespace ans_stack

#endif  // ANS_STACK_ANS_CODER_H_
