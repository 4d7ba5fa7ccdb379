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

#include "ans_stack/uniform_coder.h"

#include <cassert>
#include <string>

namespace ans_stack {

std::string ToBinaryString(const BigUint& value) {
  if (value == 0) return "0";
  std::string digits;
  const unsigned bits = boost::multiprecision::msb(value) + 1;
  digits.reserve(bits);
  for (unsigned i = bits; i-- > 0;) {
    digits.push_back(boost::multiprecision::bit_test(value, i) ? '1' : '0');
  }
  return digits;
}

Status UniformCoder::Push(std::uint64_t symbol, std::uint64_t base) {
  if (symbol >= base) {
    return MakeError(ErrorKind::kSymbolOutOfRange,
                     "symbol " + std::to_string(symbol) + " not below base " +
                         std::to_string(base));
  }
  number_ *= base;
  number_ += symbol;
  return OkStatus();
}

std::uint64_t UniformCoder::Pop(std::uint64_t base) {
  assert(base >= 1);
  BigUint quotient;
  BigUint remainder;
  boost::multiprecision::divide_qr(number_, BigUint(base), quotient, remainder);
  number_ = std::move(quotient);
  return remainder.convert_to<std::uint64_t>();
}

}  // namespace ans_stack
