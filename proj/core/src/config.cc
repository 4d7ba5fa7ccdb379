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

#include "ans_stack/config.h"

#include <string>

namespace ans_stack {

std::string StreamingConfig::ToString() const {
  return std::to_string(precision) + "/" + std::to_string(word_size) + "/" +
         std::to_string(head_capacity);
}

Status ValidateConfig(const StreamingConfig& config) {
  auto invalid = [&](const std::string& why) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "configuration " + config.ToString() + ": " + why);
  };
  if (config.precision < 1) return invalid("precision must be at least 1");
  if (config.precision > kMaxPrecision) {
    return invalid("precision must not exceed " + std::to_string(kMaxPrecision));
  }
  if (config.word_size < config.precision) {
    return invalid("word_size must be at least precision");
  }
  if (config.word_size > kMaxWordSize) {
    return invalid("word_size must not exceed " + std::to_string(kMaxWordSize));
  }
  if (config.head_capacity < config.precision + config.word_size) {
    return invalid("head_capacity must be at least precision + word_size");
  }
  if (config.head_capacity > kMaxHeadCapacity) {
    return invalid("head_capacity must not exceed " + std::to_string(kMaxHeadCapacity));
  }
  return OkStatus();
}

}  // namespace ans_stack
