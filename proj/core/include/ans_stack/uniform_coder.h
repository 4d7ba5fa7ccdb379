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

#ifndef ANS_STACK_UNIFORM_CODER_H_
#define ANS_STACK_UNIFORM_CODER_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "ans_stack/error.h"

namespace ans_stack {

using BigUint = boost::multiprecision::cpp_int;

// Base-2 digits of `value` without leading zeros ("0" for zero).
std::string ToBinaryString(const BigUint& value);

// Positional numeral system with a per-symbol base. Symbols form a stack:
// Push(s, b) appends the digit s in base b, Pop(b) removes the last digit.
class UniformCoder {
 public:
  UniformCoder() = default;
  explicit UniformCoder(BigUint number) : number_(std::move(number)) {}

  // number = number * base + symbol. kSymbolOutOfRange unless symbol < base.
  Status Push(std::uint64_t symbol, std::uint64_t base);

  // Returns number mod base and divides number by base. base must be >= 1.
  // Popping from zero yields 0 and leaves the number at zero.
  std::uint64_t Pop(std::uint64_t base);

  const BigUint& number() const { return number_; }

 private:
  BigUint number_ = 0;
};

}  // namespace ans_stack

#endif  // ANS_STACK_UNIFORM_CODER_H_
