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

#include "ans_stack/slow_ans_coder.h"

#include <string>

namespace ans_stack {

Status SlowAnsCoder::CheckModel(std::uint32_t model_precision) const {
  if (model_precision != precision_) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "model precision " + std::to_string(model_precision) +
                         " does not match coder precision " + std::to_string(precision_));
  }
  return OkStatus();
}

// Bits-back: decode z from the stack with the symbol's subrange as alphabet,
// then encode it with the uniform alphabet {0, ..., n-1}.
void SlowAnsCoder::PushQuantile(std::uint64_t low, std::uint64_t freq) {
  BigUint quotient;
  BigUint remainder;
  boost::multiprecision::divide_qr(compressed_, BigUint(freq), quotient, remainder);
  compressed_ = (quotient << precision_) + remainder + low;
}

std::uint64_t SlowAnsCoder::PopUniform() {
  const BigUint mask = (BigUint(1) << precision_) - 1;
  const auto z = static_cast<BigUint>(compressed_ & mask).convert_to<std::uint64_t>();
  compressed_ >>= precision_;
  return z;
}

void SlowAnsCoder::PushSubrange(std::uint64_t offset, std::uint64_t freq) {
  compressed_ *= freq;
  compressed_ += offset;
}

}  // namespace ans_stack
