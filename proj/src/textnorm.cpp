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

#include "rodiac/textnorm.hpp"

#include <array>
#include <algorithm>

namespace rodiac::textnorm {

namespace {

constexpr char32_t kALowerBreve = 0x103;   // ă
constexpr char32_t kAUpperBreve = 0x102;   // Ă
constexpr char32_t kALowerCirc = 0xE2;     // â
constexpr char32_t kAUpperCirc = 0xC2;     // Â
constexpr char32_t kILowerCirc = 0xEE;     // î
constexpr char32_t kIUpperCirc = 0xCE;     // Î
constexpr char32_t kSLowerComma = 0x219;   // ș
constexpr char32_t kSUpperComma = 0x218;   // Ș
constexpr char32_t kTLowerComma = 0x21B;   // ț
constexpr char32_t kTUpperComma = 0x21A;   // Ț

constexpr char32_t kSLowerCedilla = 0x15F;  // ş (legacy)
constexpr char32_t kSUpperCedilla = 0x15E;  // Ş
constexpr char32_t kTLowerCedilla = 0x163;  // ţ
constexpr char32_t kTUpperCedilla = 0x162;  // Ţ

constexpr char32_t kCombBreve = 0x306;
constexpr char32_t kCombCircumflex = 0x302;
constexpr char32_t kCombCommaBelow = 0x326;
constexpr char32_t kCombCedilla = 0x327;

const std::array<char32_t, kDiacriticCount> kDiacritics = {
    kALowerBreve, kALowerCirc, kILowerCirc, kSLowerComma, kTLowerComma,
    kAUpperBreve, kAUpperCirc, kIUpperCirc, kSUpperComma, kTUpperComma,
};

char32_t Compose(char32_t base, char32_t mark) {
  switch (mark) {
    case kCombBreve:
      if (base == U'a') return kALowerBreve;
      if (base == U'A') return kAUpperBreve;
      break;
    case kCombCircumflex:
      if (base == U'a') return kALowerCirc;
      if (base == U'A') return kAUpperCirc;
      if (base == U'i') return kILowerCirc;
      if (base == U'I') return kIUpperCirc;
      break;
    case kCombCommaBelow:
    case kCombCedilla:  // cedilla folds into the comma-below canon
      if (base == U's') return kSLowerComma;
      if (base == U'S') return kSUpperComma;
      if (base == U't') return kTLowerComma;
      if (base == U'T') return kTUpperComma;
      break;
    default:
      break;
  }
  return 0;
}

char32_t FoldCedilla(char32_t cp) {
  switch (cp) {
    case kSLowerCedilla: return kSLowerComma;
    case kSUpperCedilla: return kSUpperComma;
    case kTLowerCedilla: return kTLowerComma;
    case kTUpperCedilla: return kTUpperComma;
    default: return cp;
  }
}

bool IsLetter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
         cp >= 0x80;
}

}  // namespace

std::u32string DecodeUtf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* bytes = reinterpret_cast<const unsigned char*>(text.data());
  while (i < text.size()) {
    unsigned char b = bytes[i];
    std::size_t len;
    char32_t cp;
    if (b < 0x80) {
      len = 1;
      cp = b;
    } else if ((b & 0xE0) == 0xC0) {
      len = 2;
      cp = b & 0x1F;
    } else if ((b & 0xF0) == 0xE0) {
      len = 3;
      cp = b & 0x0F;
    } else if ((b & 0xF8) == 0xF0) {
      len = 4;
      cp = b & 0x07;
    } else {
      throw DecodeError(i, "invalid UTF-8 lead byte at offset " +
                               std::to_string(i));
    }
    if (i + len > text.size()) {
      throw DecodeError(i, "truncated UTF-8 sequence at offset " +
                               std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cont = bytes[i + k];
      if ((cont & 0xC0) != 0x80) {
        throw DecodeError(i + k, "invalid UTF-8 continuation byte at offset " +
                                     std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    // reject overlong encodings and surrogates
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
        cp > 0x10FFFF) {
      throw DecodeError(i, "invalid UTF-8 scalar at offset " +
                               std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string EncodeUtf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool IsDiacritic(char32_t cp) {
  switch (cp) {
    case kALowerBreve: case kALowerCirc: case kILowerCirc:
    case kSLowerComma: case kTLowerComma:
    case kAUpperBreve: case kAUpperCirc: case kIUpperCirc:
    case kSUpperComma: case kTUpperComma:
      return true;
    default:
      return false;
  }
}

char32_t BaseLetter(char32_t cp) {
  switch (cp) {
    case kALowerBreve: case kALowerCirc: return U'a';
    case kILowerCirc: return U'i';
    case kSLowerComma: return U's';
    case kTLowerComma: return U't';
    case kAUpperBreve: case kAUpperCirc: return U'A';
    case kIUpperCirc: return U'I';
    case kSUpperComma: return U'S';
    case kTUpperComma: return U'T';
    default: return cp;
  }
}

const char32_t* DiacriticLetters() { return kDiacritics.data(); }

std::string Normalize(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);
  std::u32string out;
  out.reserve(cps.size());
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = FoldCedilla(cps[i]);
    if (i + 1 < cps.size()) {
      char32_t composed = Compose(cp, cps[i + 1]);
      if (composed != 0) {
        out.push_back(composed);
        ++i;
        continue;
      }
    }
    out.push_back(cp);
  }
  return EncodeUtf8(out);
}

std::u32string StripDiacritics(std::u32string_view cps) {
  std::u32string out(cps);
  for (char32_t& cp : out) cp = BaseLetter(cp);
  return out;
}

std::string StripDiacritics(std::string_view text) {
  return EncodeUtf8(StripDiacritics(DecodeUtf8(text)));
}

bool IsWhitespace(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
    case 0x85: case 0xA0: case 0x2028: case 0x2029: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

std::vector<std::string> Tokenize(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && IsWhitespace(cps[i])) ++i;
    std::size_t start = i;
    while (i < cps.size() && !IsWhitespace(cps[i])) ++i;
    if (i > start) {
      tokens.push_back(EncodeUtf8(
          std::u32string_view(cps.data() + start, i - start)));
    }
  }
  return tokens;
}

char32_t ToLower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  if (cp == 0x178) return 0xFF;                                  // Ÿ
  // Latin Extended-A upper/lower pairs
  if ((cp >= 0x100 && cp <= 0x137 && cp % 2 == 0) ||
      (cp >= 0x14A && cp <= 0x177 && cp % 2 == 0) ||
      (cp >= 0x139 && cp <= 0x148 && cp % 2 == 1) ||
      (cp >= 0x179 && cp <= 0x17E && cp % 2 == 1)) {
    return cp + 1;
  }
  if (cp == kSUpperComma || cp == kTUpperComma) return cp + 1;
  return cp;
}

std::u32string ToLower(std::u32string_view cps) {
  std::u32string out(cps);
  for (char32_t& cp : out) cp = ToLower(cp);
  return out;
}

std::string ToLowerUtf8(std::string_view text) {
  return EncodeUtf8(ToLower(DecodeUtf8(text)));
}

bool IsUpper(char32_t cp) { return ToLower(cp) != cp; }

std::size_t CountDiacritics(std::string_view text) {
  std::size_t n = 0;
  for (char32_t cp : DecodeUtf8(text)) {
    if (IsDiacritic(cp)) ++n;
  }
  return n;
}

namespace {

bool IsSentenceTerminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?';
}

// True if position i ends a sentence: a terminator followed (possibly after
// more terminators/closing quotes) by whitespace or end of text.
bool EndsSentence(const std::u32string& cps, std::size_t i) {
  if (!IsSentenceTerminator(cps[i])) return false;
  std::size_t j = i + 1;
  while (j < cps.size() && IsSentenceTerminator(cps[j])) ++j;
  if (j > i + 1) return false;  // only the last terminator of a run counts
  return j >= cps.size() || IsWhitespace(cps[j]);
}

}  // namespace

std::size_t SentenceCount(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);
  std::size_t count = 0;
  bool in_sentence = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (!IsWhitespace(cps[i]) && !in_sentence) {
      in_sentence = true;
      ++count;
    }
    if (in_sentence && EndsSentence(cps, i)) in_sentence = false;
  }
  return count;
}

std::vector<DiacriticOccurrence> DiacriticOccurrences(std::string_view text) {
  std::u32string cps = DecodeUtf8(text);

  struct Token {
    std::size_t start = 0, end = 0;        // code-point span
    std::size_t core_start = 0, core_end = 0;  // letters only, edges trimmed
    std::size_t sentence = 0;
    bool sentence_first = false;
    bool sentence_last = false;
  };
  std::vector<Token> tokens;
  std::size_t i = 0;
  std::size_t sentence = 0;
  bool sentence_open = false;
  while (i < cps.size()) {
    while (i < cps.size() && IsWhitespace(cps[i])) ++i;
    if (i >= cps.size()) break;
    Token tok;
    tok.start = i;
    if (!sentence_open) {
      sentence_open = true;
      tok.sentence_first = true;
    }
    bool closes = false;
    while (i < cps.size() && !IsWhitespace(cps[i])) {
      if (EndsSentence(cps, i)) closes = true;
      ++i;
    }
    tok.end = i;
    tok.sentence = sentence;
    if (closes) {
      tok.sentence_last = true;
      sentence_open = false;
      ++sentence;
    }
    tok.core_start = tok.start;
    tok.core_end = tok.end;
    while (tok.core_start < tok.core_end && !IsLetter(cps[tok.core_start]))
      ++tok.core_start;
    while (tok.core_end > tok.core_start && !IsLetter(cps[tok.core_end - 1]))
      --tok.core_end;
    tokens.push_back(tok);
  }
  // the last token of the text closes its sentence even without a terminator
  if (!tokens.empty() && !tokens.back().sentence_last)
    tokens.back().sentence_last = true;

  std::vector<DiacriticOccurrence> occurrences;
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    const Token& tok = tokens[t];
    for (std::size_t p = tok.start; p < tok.end; ++p) {
      char32_t cp = cps[p];
      if (!IsDiacritic(cp)) continue;
      DiacriticOccurrence occ;
      occ.char_index = p;
      occ.letter = cp;
      occ.word_index = t;
      occ.word_offset = p - tok.start;
      if (tok.sentence_first && p == tok.core_start && IsUpper(cp)) {
        occ.position_class = PositionClass::kSentenceInitialCapital;
      } else if (p == tok.core_start) {
        occ.position_class = PositionClass::kWordInitial;
      } else if (p + 1 == tok.core_end) {
        occ.position_class = PositionClass::kWordFinal;
      } else {
        occ.position_class = PositionClass::kWordMedial;
      }
      if (tok.sentence_first) {
        occ.sentence_position = SentencePosition::kInitial;
      } else if (tok.sentence_last) {
        occ.sentence_position = SentencePosition::kFinal;
      } else {
        occ.sentence_position = SentencePosition::kMedial;
      }
      occurrences.push_back(occ);
    }
  }
  return occurrences;
}

const char* PositionClassName(PositionClass pc) {
  switch (pc) {
    case PositionClass::kSentenceInitialCapital: return "sentence-initial-capital";
    case PositionClass::kWordInitial: return "word-initial";
    case PositionClass::kWordMedial: return "word-medial";
    case PositionClass::kWordFinal: return "word-final";
  }
  return "?";
}

const char* SentencePositionName(SentencePosition sp) {
  switch (sp) {
    case SentencePosition::kInitial: return "initial";
    case SentencePosition::kMedial: return "medial";
    case SentencePosition::kFinal: return "final";
  }
  return "?";
}

}  // namespace rodiac::textnorm
