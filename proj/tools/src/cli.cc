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

#include "ans_stack/tools/cli.h"

#include <charconv>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ans_stack/io.h"
#include "ans_stack/tools/selftest.h"

namespace ans_stack::cli {

namespace {

Result<std::vector<std::uint8_t>> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorKind::kInsufficientData, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  if (in.bad()) {
    return MakeError(ErrorKind::kInsufficientData, "error reading " + path.string());
  }
  return data;
}

Status WriteFile(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) {
    return MakeError(ErrorKind::kInsufficientData, "cannot write " + path.string());
  }
  return OkStatus();
}

Status CheckCliConfig(const StreamingConfig& config) {
  ANS_STACK_RETURN_IF_ERROR(ValidateConfig(config));
  const std::uint32_t w = config.word_size;
  if (w != 8 && w != 16 && w != 32 && w != 64) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "word_size must be 8, 16, 32, or 64 for file output");
  }
  return OkStatus();
}

// Resolves --preset / --config into one configuration; --config wins.
Result<StreamingConfig> ResolveConfig(const std::string& preset, const std::string& triple) {
  if (!triple.empty()) return ParseConfigTriple(triple);
  return PresetByName(preset);
}

std::filesystem::path DefaultDecodeOutput(const std::filesystem::path& input) {
  if (input.extension() == ".ans") {
    std::filesystem::path out = input;
    return out.replace_extension();
  }
  return input.string() + ".out";
}

}  // namespace

Result<StreamingConfig> PresetByName(std::string_view name) {
  if (name == "default") return kDefaultConfig;
  if (name == "small") return kSmallConfig;
  return MakeError(ErrorKind::kConfigInvalid,
                   "unknown preset \"" + std::string(name) + "\" (use default or small)");
}

Result<StreamingConfig> ParseConfigTriple(std::string_view text) {
  std::array<std::uint32_t, 3> values{};
  std::size_t pos = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::size_t end = i + 1 < values.size() ? text.find(',', pos) : text.size();
    if (end == std::string_view::npos) break;
    const std::string_view field = text.substr(pos, end - pos);
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), values[i]);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      return MakeError(ErrorKind::kConfigInvalid,
                       "expected P,W,H but got \"" + std::string(text) + "\"");
    }
    pos = end + 1;
    if (i + 1 == values.size()) {
      StreamingConfig config{values[0], values[1], values[2]};
      ANS_STACK_RETURN_IF_ERROR(CheckCliConfig(config));
      return config;
    }
  }
  return MakeError(ErrorKind::kConfigInvalid,
                   "expected P,W,H but got \"" + std::string(text) + "\"");
}

Result<DecodeStrategy> ParseStrategy(std::string_view name) {
  if (name == "binary") return DecodeStrategy::kBinarySearch;
  if (name == "lookup") return DecodeStrategy::kLookupTable;
  return MakeError(ErrorKind::kConfigInvalid,
                   "unknown strategy \"" + std::string(name) + "\" (use binary or lookup)");
}

int CmdEncode(const std::filesystem::path& input, const std::filesystem::path& output,
              const StreamingConfig& config, std::ostream& err) {
  if (auto status = CheckCliConfig(config); !status.ok()) {
    err << "error: " << status.error().ToString() << '\n';
    return kExitUsage;
  }
  auto data = ReadFile(input);
  if (!data.ok()) {
    err << "error: " << data.error().ToString() << '\n';
    return kExitData;
  }
  auto compressed = CompressBytes(*data, config);
  if (!compressed.ok()) {
    err << "error: " << input.string() << ": " << compressed.error().ToString() << '\n';
    return compressed.error().kind == ErrorKind::kConfigInvalid ||
                   compressed.error().kind == ErrorKind::kModelNotNormalized
               ? kExitUsage
               : kExitData;
  }
  if (auto status = WriteFile(output, *compressed); !status.ok()) {
    err << "error: " << status.error().ToString() << '\n';
    return kExitData;
  }
  return kExitOk;
}

int CmdDecode(const std::filesystem::path& input, const std::filesystem::path& output,
              DecodeStrategy strategy, std::ostream& err) {
  auto data = ReadFile(input);
  if (!data.ok()) {
    err << "error: " << data.error().ToString() << '\n';
    return kExitData;
  }
  auto decoded = DecompressBytes(*data, strategy);
  if (!decoded.ok()) {
    err << "error: " << input.string() << ": " << decoded.error().ToString() << '\n';
    return kExitData;
  }
  if (auto status = WriteFile(output, *decoded); !status.ok()) {
    err << "error: " << status.error().ToString() << '\n';
    return kExitData;
  }
  return kExitOk;
}

int CmdBench(const SweepOptions& options, const std::optional<std::filesystem::path>& output,
             std::ostream& out, std::ostream& err) {
  auto report = RunSweep(options);
  if (!report.ok()) {
    err << "error: " << report.error().ToString() << '\n';
    return report.error().kind == ErrorKind::kConfigInvalid ? kExitUsage : kExitData;
  }
  const std::string csv = EmitCsv(*report);
  if (output) {
    const std::span<const std::uint8_t> bytes(reinterpret_cast<const std::uint8_t*>(csv.data()),
                                              csv.size());
    if (auto status = WriteFile(*output, bytes); !status.ok()) {
      err << "error: " << status.error().ToString() << '\n';
      return kExitData;
    }
  } else {
    out << csv;
  }
  return kExitOk;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entropy coding with asymmetric numeral systems", "ans-stack"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  std::string preset = "default";
  std::string triple;
  std::string strategy = "binary";

  auto add_config_flags = [&](CLI::App* cmd) {
    cmd->add_option("--preset", preset, "default (24,32,64) or small (12,16,32)")
        ->check(CLI::IsMember({"default", "small"}));
    cmd->add_option("--config", triple, "explicit precision,word_size,head_capacity");
  };

  CLI::App* encode = app.add_subcommand("encode", "compress a file");
  encode->add_option("input", input, "file to compress")->required();
  encode->add_option("--output,-o", output, "destination (default: INPUT.ans)");
  add_config_flags(encode);

  CLI::App* decode = app.add_subcommand("decode", "decompress a file");
  decode->add_option("input", input, "file to decompress")->required();
  decode->add_option("--output,-o", output, "destination (default: INPUT without .ans)");
  decode->add_option("--strategy", strategy, "symbol lookup: binary or lookup");

  SweepOptions sweep;
  std::vector<std::string> presets;
  std::vector<std::string> triples;
  std::vector<std::string> strategies;
  CLI::App* bench = app.add_subcommand("bench", "bitrate and runtime sweep over synthetic corpora");
  bench->add_option("--preset", presets, "preset(s) to benchmark (repeatable)")
      ->check(CLI::IsMember({"default", "small"}));
  bench->add_option("--config", triples, "explicit P,W,H config(s) (repeatable)");
  bench->add_option("--strategy", strategies, "binary and/or lookup (repeatable)");
  bench->add_option("--repeats", sweep.repeats, "timing repeats (median is reported)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", sweep.seed, "first corpus seed");
  bench->add_option("--seeds", sweep.seeds, "corpora per entropy")->check(CLI::PositiveNumber);
  bench->add_option("--length", sweep.length, "symbols per corpus")->check(CLI::PositiveNumber);
  bench->add_option("--alphabet", sweep.alphabet, "alphabet size")->check(CLI::PositiveNumber);
  bench->add_option("--entropies", sweep.entropies, "target entropies in bits/symbol")
      ->delimiter(',');
  bench->add_option("--output,-o", output, "CSV destination (default: stdout)");

  selftest::SelfTestOptions selftest_options;
  CLI::App* self = app.add_subcommand("selftest", "run the coder invariant suites");
  self->add_option("--seed", selftest_options.seed, "random seed");
  self->add_option("--trials", selftest_options.trials_per_config, "trials per configuration")
      ->check(CLI::PositiveNumber);
  self->add_flag("--inject-flush-fault", selftest_options.inject_flush_fault,
                 "mutation check: use a coder with a corrupted flush threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*encode) {
    auto config = ResolveConfig(preset, triple);
    if (!config.ok()) {
      err << "error: " << config.error().ToString() << '\n';
      return kExitUsage;
    }
    return CmdEncode(input, output.empty() ? input + ".ans" : output, *config, err);
  }
  if (*decode) {
    auto parsed = ParseStrategy(strategy);
    if (!parsed.ok()) {
      err << "error: " << parsed.error().ToString() << '\n';
      return kExitUsage;
    }
    return CmdDecode(input, output.empty() ? DefaultDecodeOutput(input) : std::filesystem::path(output), *parsed, err);
  }
  if (*bench) {
    if (!presets.empty() || !triples.empty()) sweep.configs.clear();
    for (const std::string& name : presets) sweep.configs.push_back(*PresetByName(name));
    for (const std::string& text : triples) {
      auto config = ParseConfigTriple(text);
      if (!config.ok()) {
        err << "error: " << config.error().ToString() << '\n';
        return kExitUsage;
      }
      sweep.configs.push_back(*config);
    }
    if (!strategies.empty()) sweep.strategies.clear();
    for (const std::string& name : strategies) {
      auto parsed = ParseStrategy(name);
      if (!parsed.ok()) {
        err << "error: " << parsed.error().ToString() << '\n';
        return kExitUsage;
      }
      sweep.strategies.push_back(*parsed);
    }
    sweep.threads = ThreadsFromEnvironment();
    return CmdBench(sweep, output.empty() ? std::nullopt : std::optional<std::filesystem::path>(output),
                    out, err);
  }
  if (*self) {
    const selftest::SelfTestReport report = selftest::RunSelfTest(selftest_options);
    selftest::PrintReport(report, out);
    return report.passed() ? kExitOk : kExitData;
  }
  return kExitUsage;
}

}  // namespace ans_stack::cli
