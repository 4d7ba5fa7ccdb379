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

#include "ans_stack/io.h"

#include <algorithm>
#include <cstdio>
#include <string>

namespace ans_stack {

namespace {

Status CheckWordSize(std::uint32_t word_size) {
  if (word_size != 8 && word_size != 16 && word_size != 32 && word_size != 64) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "word_size " + std::to_string(word_size) +
                         " cannot be serialized; use 8, 16, 32, or 64");
  }
  return OkStatus();
}

void AppendLittleEndian(std::vector<std::uint8_t>& out, std::uint64_t value,
                        std::size_t bytes) {
  for (std::size_t i = 0; i < bytes; ++i) {
    out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
  }
}

std::uint64_t ReadLittleEndian(std::span<const std::uint8_t> bytes) {
  std::uint64_t value = 0;
  for (std::size_t i = bytes.size(); i-- > 0;) value = (value << 8) | bytes[i];
  return value;
}

Error HeaderError(ErrorKind kind, std::size_t offset, const std::string& what) {
  return MakeError(kind, "container byte offset " + std::to_string(offset) + ": " + what);
}

Status CheckContainerConfig(const StreamingConfig& config) {
  ANS_STACK_RETURN_IF_ERROR(ValidateConfig(config));
  return CheckWordSize(config.word_size);
}

template <EntropyModel M>
Result<std::vector<std::uint8_t>> DecodePayload(const ParsedContainer& container,
                                                const M& model) {
  const FileHeader& header = container.header;
  auto words = BytesToWords(container.payload, header.config.word_size);
  if (!words.ok()) return words.error();
  auto coder = AnsCoder::Create(header.config, *words);
  if (!coder.ok()) return coder.error();

  std::vector<std::uint8_t> out;
  // The length comes from an untrusted header; let large outputs grow.
  out.reserve(std::min<std::uint64_t>(header.message_length, std::uint64_t{1} << 24));
  for (std::uint64_t i = 0; i < header.message_length; ++i) {
    auto symbol = coder->Pop(model);
    if (!symbol.ok()) return symbol.error();
    out.push_back(static_cast<std::uint8_t>(*symbol));
  }
  // A complete payload was encoded from an empty coder, so decoding all of it
  // must return there.
  if (!coder->empty()) {
    return MakeError(ErrorKind::kInsufficientData,
                     "payload does not decode to a clean end state (truncated or corrupt)");
  }
  // The encoder derived the table from these bytes, so they must reproduce it.
  // This catches payloads cut down to a prefix that still decodes cleanly.
  auto histogram = ByteFrequencyModel(out, header.config.precision);
  if (!histogram.ok()) return histogram.error();
  if (!std::ranges::equal(histogram->frequencies(), header.frequencies)) {
    return MakeError(ErrorKind::kInsufficientData,
                     "decoded bytes do not match the frequency table (truncated or corrupt)");
  }
  return out;
}

}  // namespace

Result<std::vector<std::uint8_t>> WordsToBytes(std::span<const Word> words,
                                               std::uint32_t word_size) {
  ANS_STACK_RETURN_IF_ERROR(CheckWordSize(word_size));
  const std::size_t bytes_per_word = word_size / 8;
  std::vector<std::uint8_t> out;
  out.reserve(words.size() * bytes_per_word);
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (word_size < 64 && (words[i] >> word_size) != 0) {
      return MakeError(ErrorKind::kWordOutOfRange,
                       "word " + std::to_string(i) + " exceeds " +
                           std::to_string(word_size) + " bits");
    }
    AppendLittleEndian(out, words[i], bytes_per_word);
  }
  return out;
}

Result<std::vector<Word>> BytesToWords(std::span<const std::uint8_t> bytes,
                                       std::uint32_t word_size) {
  ANS_STACK_RETURN_IF_ERROR(CheckWordSize(word_size));
  const std::size_t bytes_per_word = word_size / 8;
  if (bytes.size() % bytes_per_word != 0) {
    return MakeError(ErrorKind::kInsufficientData,
                     std::to_string(bytes.size()) + " bytes is not a whole number of " +
                         std::to_string(word_size) + "-bit words");
  }
  std::vector<Word> words;
  words.reserve(bytes.size() / bytes_per_word);
  for (std::size_t i = 0; i < bytes.size(); i += bytes_per_word) {
    words.push_back(ReadLittleEndian(bytes.subspan(i, bytes_per_word)));
  }
  return words;
}

namespace internal {

Status CheckFramingConfig(const StreamingConfig& config) {
  ANS_STACK_RETURN_IF_ERROR(ValidateConfig(config));
  if (config.head_capacity > 2 * config.word_size) {
    return MakeError(ErrorKind::kConfigInvalid,
                     "framing needs head_capacity <= 2 * word_size, got " +
                         config.ToString());
  }
  return OkStatus();
}

Status CheckModelCount(std::size_t models, std::size_t message_length) {
  if (models == 1 || models == message_length) return OkStatus();
  return MakeError(ErrorKind::kSymbolOutOfRange,
                   std::to_string(models) + " models for a message of length " +
                       std::to_string(message_length));
}

}  // namespace internal

Result<std::vector<std::uint8_t>> SerializeHeader(const FileHeader& header) {
  ANS_STACK_RETURN_IF_ERROR(CheckContainerConfig(header.config));
  if (header.frequencies.empty() || header.frequencies.size() > 0xFFFFFFFFu) {
    return MakeError(ErrorKind::kModelNotNormalized, "alphabet size out of range");
  }
  std::uint64_t sum = 0;
  for (const std::uint64_t m : header.frequencies) {
    if (m > 0xFFFFFFFFu) {
      return MakeError(ErrorKind::kModelNotNormalized,
                       "frequency " + std::to_string(m) + " does not fit 32 bits");
    }
    sum += m;
  }
  if (sum != (std::uint64_t{1} << header.config.precision)) {
    return MakeError(ErrorKind::kModelNotNormalized,
                     "frequencies sum to " + std::to_string(sum));
  }

  std::vector<std::uint8_t> out(kContainerMagic.begin(), kContainerMagic.end());
  out.reserve(header.SerializedSize());
  out.push_back(static_cast<std::uint8_t>(header.config.precision));
  out.push_back(static_cast<std::uint8_t>(header.config.word_size));
  out.push_back(static_cast<std::uint8_t>(header.config.head_capacity));
  AppendLittleEndian(out, header.frequencies.size(), 4);
  AppendLittleEndian(out, header.message_length, 8);
  for (const std::uint64_t m : header.frequencies) AppendLittleEndian(out, m, 4);
  return out;
}

Result<ParsedContainer> ParseContainer(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kContainerMagic.size() ||
      !std::equal(kContainerMagic.begin(), kContainerMagic.end(), bytes.begin())) {
    std::string found;
    for (std::size_t i = 0; i < std::min<std::size_t>(4, bytes.size()); ++i) {
      const char c = static_cast<char>(bytes[i]);
      if (c >= 0x20 && c < 0x7f) {
        found.push_back(c);
      } else {
        char escaped[5];
        std::snprintf(escaped, sizeof(escaped), "\\x%02x", bytes[i]);
        found += escaped;
      }
    }
    return HeaderError(ErrorKind::kConfigInvalid, 0,
                       "bad magic \"" + found + "\", expected \"ANS1\"");
  }
  if (bytes.size() < kFixedHeaderBytes) {
    return HeaderError(ErrorKind::kInsufficientData, bytes.size(), "header is truncated");
  }

  ParsedContainer parsed;
  FileHeader& header = parsed.header;
  header.config = {bytes[4], bytes[5], bytes[6]};
  if (auto status = CheckContainerConfig(header.config); !status.ok()) {
    return HeaderError(ErrorKind::kConfigInvalid, 4, status.error().message);
  }
  const std::uint64_t alphabet = ReadLittleEndian(bytes.subspan(7, 4));
  header.message_length = ReadLittleEndian(bytes.subspan(11, 8));
  if (alphabet == 0) {
    return HeaderError(ErrorKind::kModelNotNormalized, 7, "alphabet size is zero");
  }
  if ((bytes.size() - kFixedHeaderBytes) / 4 < alphabet) {
    return HeaderError(ErrorKind::kInsufficientData, bytes.size(),
                       "frequency table is truncated");
  }

  header.frequencies.reserve(alphabet);
  std::uint64_t sum = 0;
  for (std::uint64_t x = 0; x < alphabet; ++x) {
    const std::uint64_t m = ReadLittleEndian(bytes.subspan(kFixedHeaderBytes + 4 * x, 4));
    header.frequencies.push_back(m);
    sum += m;
  }
  if (sum != (std::uint64_t{1} << header.config.precision)) {
    return HeaderError(ErrorKind::kModelNotNormalized, kFixedHeaderBytes,
                       "frequencies sum to " + std::to_string(sum) + ", expected 2^" +
                           std::to_string(header.config.precision));
  }
  parsed.payload = bytes.subspan(header.SerializedSize());
  return parsed;
}

Result<CategoricalModel> ByteFrequencyModel(std::span<const std::uint8_t> data,
                                            std::uint32_t precision) {
  std::vector<double> probabilities(256, 0.0);
  if (data.empty()) {
    std::fill(probabilities.begin(), probabilities.end(), 1.0 / 256.0);
  } else {
    std::vector<std::uint64_t> counts(256, 0);
    for (const std::uint8_t byte : data) ++counts[byte];
    for (std::size_t x = 0; x < 256; ++x) {
      probabilities[x] = static_cast<double>(counts[x]) / static_cast<double>(data.size());
    }
  }
  auto real = RealModel::Create(std::move(probabilities));
  if (!real.ok()) return real.error();
  return Quantize(*real, precision, {.floor_all_symbols = true});
}

Result<std::vector<std::uint8_t>> CompressBytes(std::span<const std::uint8_t> input,
                                                const StreamingConfig& config) {
  ANS_STACK_RETURN_IF_ERROR(CheckContainerConfig(config));
  auto model = ByteFrequencyModel(input, config.precision);
  if (!model.ok()) return model.error();

  auto coder = AnsCoder::Create(config);
  if (!coder.ok()) return coder.error();
  for (std::size_t i = input.size(); i-- > 0;) {
    ANS_STACK_RETURN_IF_ERROR(coder->Push(input[i], *model));
  }

  FileHeader header{config, input.size(),
                    {model->frequencies().begin(), model->frequencies().end()}};
  auto out = SerializeHeader(header);
  if (!out.ok()) return out.error();
  auto payload = WordsToBytes(coder->GetCompressed(), config.word_size);
  if (!payload.ok()) return payload.error();
  out->insert(out->end(), payload->begin(), payload->end());
  return out;
}

Result<std::vector<std::uint8_t>> DecompressBytes(std::span<const std::uint8_t> container,
                                                  DecodeStrategy strategy) {
  auto parsed = ParseContainer(container);
  if (!parsed.ok()) return parsed.error();
  const FileHeader& header = parsed->header;
  if (header.frequencies.size() > 256) {
    return HeaderError(ErrorKind::kSymbolOutOfRange, 7,
                       "alphabet of " + std::to_string(header.frequencies.size()) +
                           " symbols does not fit in bytes");
  }
  auto model = CategoricalModel::FromFrequencies(header.config.precision, header.frequencies);
  if (!model.ok()) return model.error();
  if (strategy == DecodeStrategy::kLookupTable) {
    auto lookup = LookupModel::Build(*model);
    if (!lookup.ok()) return lookup.error();
    return DecodePayload(*parsed, *lookup);
  }
  return DecodePayload(*parsed, *model);
}

}  // namespace ans_stack
