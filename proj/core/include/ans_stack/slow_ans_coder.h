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

#ifndef ANS_STACK_SLOW_ANS_CODER_H_
#define ANS_STACK_SLOW_ANS_CODER_H_

#include <cstdint>

#include "ans_stack/error.h"
#include "ans_stack/model.h"
#include "ans_stack/uniform_coder.h"

namespace ans_stack {

// Bits-back coder over a single arbitrary-precision integer. Push decodes a
// quantile from the stack with the symbol's subrange as alphabet and encodes
// it back with the uniform alphabet {0, ..., n-1}; Pop does the reverse.
//
// Runtime is quadratic in the message length. This is the reference the
// streaming AnsCoder is checked against, not a production coder.
class SlowAnsCoder {
 public:
  explicit SlowAnsCoder(std::uint32_t precision, BigUint compressed = 0)
      : precision_(precision), compressed_(std::move(compressed)) {}

  template <EntropyModel M>
  Status Push(Symbol symbol, const M& model) {
    ANS_STACK_RETURN_IF_ERROR(CheckModel(model.precision()));
    if (symbol >= model.alphabet_size()) {
      return MakeError(ErrorKind::kSymbolOutOfRange,
                       "symbol " + std::to_string(symbol) + " outside alphabet of size " +
                           std::to_string(model.alphabet_size()));
    }
    const std::uint64_t freq = model.frequency(symbol);
    if (freq == 0) {
      return MakeError(ErrorKind::kFrequencyZero,
                       "symbol " + std::to_string(symbol) + " has zero frequency");
    }
    PushQuantile(model.cumulative(symbol), freq);
    return OkStatus();
  }

  template <EntropyModel M>
  Result<Symbol> Pop(const M& model) {
    ANS_STACK_RETURN_IF_ERROR(CheckModel(model.precision()));
    const std::uint64_t z = PopUniform();
    const Located located = model.Locate(z);
    PushSubrange(located.offset, model.frequency(located.symbol));
    return located.symbol;
  }

  std::uint32_t precision() const { return precision_; }
  const BigUint& compressed() const { return compressed_; }

 private:
  Status CheckModel(std::uint32_t model_precision) const;
  void PushQuantile(std::uint64_t low, std::uint64_t freq);
  std::uint64_t PopUniform();
  void PushSubrange(std::uint64_t offset, std::uint64_t freq);

  std::uint32_t precision_;
  BigUint compressed_;
};

}  // namespace ans_stack

#endif  // ANS_STACK_SLOW_ANS_CODER_H_
