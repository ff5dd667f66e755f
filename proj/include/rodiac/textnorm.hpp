// Copyright 2026 The rodiac authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RODIAC_TEXTNORM_HPP_
#define RODIAC_TEXTNORM_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rodiac::textnorm {

/// Thrown when a byte sequence is not valid UTF-8. what() names the byte
/// offset of the first offending byte.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& message)
      : std::runtime_error(message), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

// UTF-8 <-> code points. decode throws DecodeError on malformed input.
std::u32string DecodeUtf8(std::string_view text);
std::string EncodeUtf8(std::u32string_view cps);

// The ten Romanian diacritic letters and their base letters.
// lower: ă â î ș ț -> a a i s t; upper: Ă Â Î Ș Ț -> A A I S T.
bool IsDiacritic(char32_t cp);
char32_t BaseLetter(char32_t cp);  // identity for non-diacritics
inline constexpr int kDiacriticCount = 10;
const char32_t* DiacriticLetters();  // the 10 code points, lower then upper

// Canonical form: legacy cedilla s/t folded to comma-below, and the
// Romanian base+combining-mark pairs composed into single code points.
// Idempotent.
std::string Normalize(std::string_view text);

// Replaces every diacritic letter with its base letter; everything else
// passes through. Length-preserving in code points, idempotent.
std::string StripDiacritics(std::string_view text);
std::u32string StripDiacritics(std::u32string_view cps);

// Maximal runs of non-whitespace code points; punctuation stays attached.
std::vector<std::string> Tokenize(std::string_view text);

// Unicode-aware lowercase over ASCII, Latin-1 and Latin Extended-A plus the
// Romanian comma-below letters. Other code points pass through.
char32_t ToLower(char32_t cp);
std::u32string ToLower(std::u32string_view cps);
std::string ToLowerUtf8(std::string_view text);
bool IsUpper(char32_t cp);

bool IsWhitespace(char32_t cp);

// Number of diacritic letters in the text.
std::size_t CountDiacritics(std::string_view text);

// Sentences end at '.', '!' or '?' followed by whitespace or end of text.
// Empty/whitespace-only text counts as zero sentences.
std::size_t SentenceCount(std::string_view text);

enum class PositionClass {
  kSentenceInitialCapital,
  kWordInitial,
  kWordMedial,
  kWordFinal,
};

enum class SentencePosition { kInitial, kMedial, kFinal };

const char* PositionClassName(PositionClass pc);
const char* SentencePositionName(SentencePosition sp);

struct DiacriticOccurrence {
  std::size_t char_index = 0;  // 0-based code-point offset in the text
  char32_t letter = 0;
  std::size_t word_index = 0;
  std::size_t word_offset = 0;  // offset within the raw token
  PositionClass position_class = PositionClass::kWordMedial;
  SentencePosition sentence_position = SentencePosition::kMedial;
};

// One record per diacritic letter, in reading order.
std::vector<DiacriticOccurrence> DiacriticOccurrences(std::string_view text);

}  // namespace rodiac::textnorm

#endif  // RODIAC_TEXTNORM_HPP_
