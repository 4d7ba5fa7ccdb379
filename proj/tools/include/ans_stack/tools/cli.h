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

#ifndef ANS_STACK_TOOLS_CLI_H_
#define ANS_STACK_TOOLS_CLI_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string_view>

#include "ans_stack/bench.h"
#include "ans_stack/config.h"
#include "ans_stack/error.h"
#include "ans_stack/model.h"

namespace ans_stack::cli {

// Stable exit code contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// "default" or "small".
Result<StreamingConfig> PresetByName(std::string_view name);

// "P,W,H", e.g. "24,32,64". Must validate and use a serializable word size.
Result<StreamingConfig> ParseConfigTriple(std::string_view text);

Result<DecodeStrategy> ParseStrategy(std::string_view name);

int CmdEncode(const std::filesystem::path& input, const std::filesystem::path& output,
              const StreamingConfig& config, std::ostream& err);
int CmdDecode(const std::filesystem::path& input, const std::filesystem::path& output,
              DecodeStrategy strategy, std::ostream& err);
int CmdBench(const SweepOptions& options, const std::optional<std::filesystem::path>& output,
             std::ostream& out, std::ostream& err);

// Full command line entry point; returns the process exit code.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ans_stack::cli

#endif  // ANS_STACK_TOOLS_CLI_H_
