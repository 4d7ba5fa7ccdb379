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

#include "ans_stack/chain_coder.h"

#include <string>

namespace ans_stack {

Result<ChainCoder> ChainCoder::Create(std::uint32_t precision,
                                      std::span<const Word> compressed,
                                      std::span<const Word> remainders) {
  if (precision < 1 || precision > kMaxPrecision) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "precision " + std::to_string(precision) + " outside [1, " +
                         std::to_string(kMaxPrecision) + "]");
  }
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    if ((remainders[i] >> precision) != 0) {
      return MakeError(ErrorKind::kWordOutOfRange,
                       "remainders word " + std::to_string(i) + " exceeds " +
                           std::to_string(precision) + " bits");
    }
  }
  ChainCoder coder(precision);
  coder.compressed_.assign(compressed.begin(), compressed.end());
  coder.remainders_.assign(remainders.begin(), remainders.end());
  while (!coder.remainders_.empty() && (coder.remainders_head_ >> precision) == 0) {
    coder.remainders_head_ = (coder.remainders_head_ << precision) | coder.remainders_.back();
    coder.remainders_.pop_back();
  }
  return coder;
}

ChainCoder::Parts ChainCoder::Finalize() const {
  Parts parts{compressed_, remainders_};
  const Word mask = (Word{1} << precision_) - 1;
  for (Head head = remainders_head_; head != 0; head >>= precision_) {
    parts.remainders.push_back(static_cast<Word>(head) & mask);
  }
  return parts;
}

bool ChainCoder::InvariantsHold() const {
  const Head one = 1;
  return remainders_head_ < (one << (2 * precision_)) &&
         (remainders_.empty() || remainders_head_ >= (one << precision_));
}

Status ChainCoder::CheckModel(std::uint32_t model_precision) const {
  if (model_precision != precision_) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "model precision " + std::to_string(model_precision) +
                         " does not match coder precision " + std::to_string(precision_));
  }
  return OkStatus();
}

}  // namespace ans_stack
