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

#ifndef ANS_STACK_CONFIG_H_
#define ANS_STACK_CONFIG_H_

#include <array>
#include <cstdint>
#include <string>

#include "ans_stack/error.h"

namespace ans_stack {

// One compressed word. Only the low `word_size` bits may be set.
using Word = std::uint64_t;

// Dense nonnegative index into a model's alphabet.
using Symbol = std::uint32_t;

// Coder state. Wide enough for any head_capacity up to kMaxHeadCapacity.
using Head = unsigned __int128;

inline constexpr std::uint32_t kMaxPrecision = 32;
inline constexpr std::uint32_t kMaxWordSize = 64;
inline constexpr std::uint32_t kMaxHeadCapacity = 128;

// Streaming configuration of an ANS coder, all quantities in bits:
//
//   precision      fixed-point resolution of entropy models (n = 2^precision)
//   word_size      size of the words that are moved between head and bulk
//   head_capacity  size of the head
//
// A valid configuration satisfies
//   1 <= precision <= word_size <= 64 and head_capacity >= precision + word_size
// with precision <= 32 and head_capacity <= 128.
struct StreamingConfig {
  std::uint32_t precision = 24;
  std::uint32_t word_size = 32;
  std::uint32_t head_capacity = 64;

  friend bool operator==(const StreamingConfig&,
                         const StreamingConfig&) = default;

  // "precision/word_size/head_capacity", e.g. "24/32/64".
  std::string ToString() const;
};

inline constexpr StreamingConfig kDefaultConfig{24, 32, 64};
inline constexpr StreamingConfig kSmallConfig{12, 16, 32};
inline constexpr StreamingConfig kSimple32Config{32, 32, 64};
inline constexpr StreamingConfig kSimple16Config{16, 16, 32};

inline constexpr std::array<StreamingConfig, 4> kPresetConfigs = {
    kDefaultConfig, kSmallConfig, kSimple32Config, kSimple16Config};

Status ValidateConfig(const StreamingConfig& config);

}  // namespace ans_stack

#endif  // ANS_STACK_CONFIG_H_
