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

#include "ans_stack/ans_coder.h"

#include <string>

namespace ans_stack {

AnsCoder::AnsCoder(const StreamingConfig& config)
    : config_(config),
      flush_shift_(config.head_capacity - config.precision),
      refill_threshold_(Head{1} << (config.head_capacity - config.word_size)),
      word_mask_(config.word_size == 64 ? ~Word{0} : (Word{1} << config.word_size) - 1),
      quantile_mask_((std::uint64_t{1} << config.precision) - 1) {}

Result<AnsCoder> AnsCoder::Create(const StreamingConfig& config,
                                  std::span<const Word> compressed) {
  ANS_STACK_RETURN_IF_ERROR(ValidateConfig(config));
  AnsCoder coder(config);
  for (std::size_t i = 0; i < compressed.size(); ++i) {
    if ((compressed[i] & ~coder.word_mask_) != 0) {
      return MakeError(ErrorKind::kWordOutOfRange,
                       "word " + std::to_string(i) + " (" + std::to_string(compressed[i]) +
                           ") exceeds " + std::to_string(config.word_size) + " bits");
    }
  }
  coder.bulk_.assign(compressed.begin(), compressed.end());
  while (!coder.bulk_.empty() && coder.head_ < coder.refill_threshold_) {
    coder.head_ = (coder.head_ << config.word_size) | coder.bulk_.back();
    coder.bulk_.pop_back();
  }
  return coder;
}

Result<AnsCoder> AnsCoder::FromBinary(const StreamingConfig& config,
                                      std::span<const Word> data) {
  std::vector<Word> words(data.begin(), data.end());
  words.push_back(1);
  return Create(config, words);
}

std::vector<Word> AnsCoder::GetCompressed() const {
  std::vector<Word> compressed = bulk_;
  for (Head head = head_; head != 0; head >>= config_.word_size) {
    compressed.push_back(static_cast<Word>(head) & word_mask_);
  }
  return compressed;
}

Result<std::vector<Word>> AnsCoder::GetBinary() const {
  std::vector<Word> compressed = GetCompressed();
  if (compressed.empty() || compressed.back() != 1) {
    return MakeError(ErrorKind::kInsufficientData,
                     "coder does not end in the binary sentinel word");
  }
  compressed.pop_back();
  return compressed;
}

Status AnsCoder::Seek(const Checkpoint& checkpoint) {
  if (checkpoint.bulk_len > bulk_.size()) {
    return MakeError(ErrorKind::kSeekForwardOnly,
                     "checkpoint at bulk length " + std::to_string(checkpoint.bulk_len) +
                         " lies beyond current length " + std::to_string(bulk_.size()));
  }
  bulk_.resize(checkpoint.bulk_len);
  head_ = checkpoint.head;
  return OkStatus();
}

std::size_t AnsCoder::CompressedBits() const {
  std::size_t words = bulk_.size();
  for (Head head = head_; head != 0; head >>= config_.word_size) ++words;
  return words * config_.word_size;
}

bool AnsCoder::InvariantsHold() const {
  const bool fits = config_.head_capacity == 128 || (head_ >> config_.head_capacity) == 0;
  return fits && (bulk_.empty() || head_ >= refill_threshold_);
}

Error AnsCoder::PrecisionMismatch(std::uint32_t model_precision) const {
  return MakeError(ErrorKind::kConfigInvalid,
                   "model precision " + std::to_string(model_precision) +
                       " does not match coder precision " +
                       std::to_string(config_.precision));
}

Status AnsCoder::CheckModel(std::uint32_t model_precision, std::size_t alphabet_size,
                            Symbol symbol) const {
  if (model_precision != config_.precision) return PrecisionMismatch(model_precision);
  if (symbol >= alphabet_size) {
    return MakeError(ErrorKind::kSymbolOutOfRange,
                     "symbol " + std::to_string(symbol) + " outside alphabet of size " +
                         std::to_string(alphabet_size));
  }
  return OkStatus();
}

}  // namespace ans_stack
