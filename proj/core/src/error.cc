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

#include "ans_stack/error.h"

namespace ans_stack {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kFrequencyZero:
      return "FrequencyZero";
    case ErrorKind::kModelNotNormalized:
      return "ModelNotNormalized";
    case ErrorKind::kSymbolOutOfRange:
      return "SymbolOutOfRange";
    case ErrorKind::kWordOutOfRange:
      return "WordOutOfRange";
    case ErrorKind::kSeekForwardOnly:
      return "SeekForwardOnly";
    case ErrorKind::kInsufficientData:
      return "InsufficientData";
    case ErrorKind::kConfigInvalid:
      return "ConfigInvalid";
  }
  return "Unknown";
}

std::string Error::ToString() const {
  std::string out(ErrorKindName(kind));
  out += ": ";
  out += message;
  return out;
}

}  // namespace ans_stack
