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

#include "rodiac/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "rodiac/textnorm.hpp"

namespace rodiac::corpus {

namespace {

std::string Trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n\f\v");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string NormalizedWord(const std::string& token) {
  std::u32string cps = textnorm::DecodeUtf8(token);
  auto is_wordchar = [](char32_t cp) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'0' && cp <= U'9') || cp >= 0x80;
  };
  std::size_t b = 0, e = cps.size();
  while (b < e && !is_wordchar(cps[b])) ++b;
  while (e > b && !is_wordchar(cps[e - 1])) --e;
  return textnorm::ToLowerUtf8(
      textnorm::EncodeUtf8(std::u32string_view(cps.data() + b, e - b)));
}

std::vector<Statement> LoadCorpus(const std::string& path,
                                  const std::string& tag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<Statement> corpus;
  std::string line;
  std::size_t line_no = 0;
  std::size_t ordinal = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed = Trim(line);
    if (trimmed.empty()) continue;
    Statement st;
    try {
      st.text = textnorm::Normalize(trimmed);
    } catch (const textnorm::DecodeError& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " +
                               e.what());
    }
    st.id = tag + "-" + std::to_string(ordinal++);
    st.dataset = tag;
    corpus.push_back(std::move(st));
  }
  if (in.bad()) throw std::runtime_error("I/O error reading: " + path);
  return corpus;
}

std::vector<Statement> Sample(const std::vector<Statement>& corpus,
                              std::size_t n, std::uint64_t seed) {
  if (n > corpus.size()) {
    throw std::out_of_range("sample size " + std::to_string(n) +
                            " exceeds corpus size " +
                            std::to_string(corpus.size()));
  }
  std::vector<std::size_t> indices(corpus.size());
  std::iota(indices.begin(), indices.end(), 0);
  std::mt19937_64 rng(seed);
  // partial Fisher-Yates: the first n slots are a uniform sample
  for (std::size_t i = 0; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, indices.size() - 1);
    std::swap(indices[i], indices[pick(rng)]);
  }
  indices.resize(n);
  std::sort(indices.begin(), indices.end());
  std::vector<Statement> out;
  out.reserve(n);
  for (std::size_t idx : indices) out.push_back(corpus[idx]);
  return out;
}

CorpusStats ComputeStats(const std::vector<Statement>& corpus) {
  CorpusStats stats;
  stats.total_statements = corpus.size();
  std::unordered_set<std::string> distinct;
  std::unordered_set<std::string> with_diacritics;
  for (const Statement& st : corpus) {
    for (const std::string& token : textnorm::Tokenize(st.text)) {
      ++stats.total_words;
      std::string word = NormalizedWord(token);
      if (word.empty()) continue;
      distinct.insert(word);
      if (textnorm::CountDiacritics(word) > 0) with_diacritics.insert(word);
    }
    stats.total_diacritic_chars += textnorm::CountDiacritics(st.text);
  }
  stats.distinct_words = distinct.size();
  stats.words_with_diacritics = with_diacritics.size();
  if (stats.total_statements > 0) {
    stats.avg_words_per_statement =
        static_cast<double>(stats.total_words) / stats.total_statements;
    stats.avg_diacritics_per_statement =
        static_cast<double>(stats.total_diacritic_chars) /
        stats.total_statements;
  }
  if (stats.total_words > 0) {
    stats.avg_diacritics_per_word =
        static_cast<double>(stats.total_diacritic_chars) / stats.total_words;
  }
  return stats;
}

std::vector<std::pair<std::string, std::string>> StripCorpus(
    const std::vector<Statement>& corpus) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(corpus.size());
  for (const Statement& st : corpus) {
    out.emplace_back(st.id, textnorm::StripDiacritics(st.text));
  }
  return out;
}

std::string StatsCsv(const CorpusStats& s) {
  std::ostringstream os;
  os << "key,value\n";
  os << "total_statements," << s.total_statements << "\n";
  os << "total_words," << s.total_words << "\n";
  os << "distinct_words," << s.distinct_words << "\n";
  os << "words_with_diacritics," << s.words_with_diacritics << "\n";
  os << "total_diacritic_chars," << s.total_diacritic_chars << "\n";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", s.avg_words_per_statement);
  os << "avg_words_per_statement," << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.6f", s.avg_diacritics_per_statement);
  os << "avg_diacritics_per_statement," << buf << "\n";
  std::snprintf(buf, sizeof buf, "%.6f", s.avg_diacritics_per_word);
  os << "avg_diacritics_per_word," << buf << "\n";
  return os.str();
}

}  // namespace rodiac::corpus
