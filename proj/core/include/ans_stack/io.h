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

#ifndef ANS_STACK_IO_H_
#define ANS_STACK_IO_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ans_stack/ans_coder.h"
#include "ans_stack/config.h"
#include "ans_stack/error.h"
#include "ans_stack/model.h"

namespace ans_stack {

// ---------------------------------------------------------------------------
// Word <-> byte serialization. Each word is written little-endian in
// word_size / 8 bytes; word_size must be one of 8, 16, 32, 64.

Result<std::vector<std::uint8_t>> WordsToBytes(std::span<const Word> words,
                                               std::uint32_t word_size);
Result<std::vector<Word>> BytesToWords(std::span<const std::uint8_t> bytes,
                                       std::uint32_t word_size);

// ---------------------------------------------------------------------------
// Self-delimiting frames.
//
// A frame is produced by an AnsCoder constructed from the words [0, 1]. After
// decoding the whole message from `prefix ++ frame`, the decoder's bulk is
// exactly `prefix` again and its head is 2^word_size (= n when word_size =
// precision). This requires head_capacity <= 2 * word_size.
//
// `models` holds either one model per symbol or a single model shared by all.

template <EntropyModel M>
Result<std::vector<Word>> EncodeFramed(const StreamingConfig& config,
                                       std::span<const Symbol> message,
                                       std::span<const M> models);

struct FramedDecoding {
  std::vector<Symbol> message;
  std::vector<Word> prefix;  // what is left of the input once the frame is consumed
  Head head = 0;
};

template <EntropyModel M>
Result<FramedDecoding> DecodeFramed(const StreamingConfig& config,
                                    std::span<const Word> words,
                                    std::size_t message_length,
                                    std::span<const M> models);

// ---------------------------------------------------------------------------
// File container:
//
//   offset  size              field
//   0       4                 magic "ANS1"
//   4       1                 precision
//   5       1                 word_size
//   6       1                 head_capacity
//   7       4  (LE)           alphabet_size
//   11      8  (LE)           message_length
//   19      4 * alphabet (LE) frequencies m[x]
//   ...                       payload: compressed words, little-endian
//
// The payload decodes front to back; the encoder pushes the message in reverse.

inline constexpr std::array<std::uint8_t, 4> kContainerMagic = {'A', 'N', 'S', '1'};
inline constexpr std::size_t kFixedHeaderBytes = 19;

struct FileHeader {
  StreamingConfig config;
  std::uint64_t message_length = 0;
  std::vector<std::uint64_t> frequencies;

  std::size_t SerializedSize() const {
    return kFixedHeaderBytes + 4 * frequencies.size();
  }
};

// kModelNotNormalized / kConfigInvalid if the header would not parse back.
Result<std::vector<std::uint8_t>> SerializeHeader(const FileHeader& header);

struct ParsedContainer {
  FileHeader header;
  std::span<const std::uint8_t> payload;
};

// Validates magic, configuration, and frequency table. Error messages name
// the byte offset of the offending field.
Result<ParsedContainer> ParseContainer(std::span<const std::uint8_t> bytes);

// Empirical byte-frequency model quantized at `precision`. Bytes that never
// occur still get frequency 1 so that every byte stays encodable.
Result<CategoricalModel> ByteFrequencyModel(std::span<const std::uint8_t> data,
                                            std::uint32_t precision);

// Whole-buffer container codec used by the CLI.
Result<std::vector<std::uint8_t>> CompressBytes(std::span<const std::uint8_t> input,
                                                const StreamingConfig& config);
Result<std::vector<std::uint8_t>> DecompressBytes(
    std::span<const std::uint8_t> container,
    DecodeStrategy strategy = DecodeStrategy::kBinarySearch);

// ---------------------------------------------------------------------------

namespace internal {

Status CheckFramingConfig(const StreamingConfig& config);
Status CheckModelCount(std::size_t models, std::size_t message_length);

template <EntropyModel M>
const M& ModelAt(std::span<const M> models, std::size_t i) {
  return models.size() == 1 ? models[0] : models[i];
}

}  // namespace internal

template <EntropyModel M>
Result<std::vector<Word>> EncodeFramed(const StreamingConfig& config,
                                       std::span<const Symbol> message,
                                       std::span<const M> models) {
  ANS_STACK_RETURN_IF_ERROR(internal::CheckFramingConfig(config));
  ANS_STACK_RETURN_IF_ERROR(internal::CheckModelCount(models.size(), message.size()));
  constexpr std::array<Word, 2> kSentinel = {0, 1};
  auto coder = AnsCoder::Create(config, kSentinel);
  if (!coder.ok()) return coder.error();
  for (std::size_t i = message.size(); i-- > 0;) {
    ANS_STACK_RETURN_IF_ERROR(coder->Push(message[i], internal::ModelAt(models, i)));
  }
  return coder->GetCompressed();
}

template <EntropyModel M>
Result<FramedDecoding> DecodeFramed(const StreamingConfig& config,
                                    std::span<const Word> words,
                                    std::size_t message_length,
                                    std::span<const M> models) {
  ANS_STACK_RETURN_IF_ERROR(internal::CheckFramingConfig(config));
  ANS_STACK_RETURN_IF_ERROR(internal::CheckModelCount(models.size(), message_length));
  auto coder = AnsCoder::Create(config, words);
  if (!coder.ok()) return coder.error();
  FramedDecoding out;
  out.message.reserve(message_length);
  for (std::size_t i = 0; i < message_length; ++i) {
    auto symbol = coder->Pop(internal::ModelAt(models, i));
    if (!symbol.ok()) return symbol.error();
    out.message.push_back(*symbol);
  }
  out.prefix.assign(coder->bulk().begin(), coder->bulk().end());
  out.head = coder->head();
  return out;
}

}  // namespace ans_stack

#endif  // ANS_STACK_IO_H_
