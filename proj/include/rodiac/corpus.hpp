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

#ifndef RODIAC_CORPUS_HPP_
#define RODIAC_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rodiac::corpus {

struct Statement {
  std::string id;       // "<dataset>-<ordinal>"
  std::string text;     // normalized gold text
  std::string dataset;  // e.g. DLRLC, CRAWLER
};

struct CorpusStats {
  std::size_t total_statements = 0;
  std::size_t total_words = 0;
  std::size_t distinct_words = 0;          // case-insensitive, diacritic-sensitive
  std::size_t words_with_diacritics = 0;   // distinct words with >=1 diacritic
  std::size_t total_diacritic_chars = 0;
  double avg_words_per_statement = 0.0;
  double avg_diacritics_per_statement = 0.0;
  double avg_diacritics_per_word = 0.0;
};

// One statement per line, UTF-8, LF endings. Lines are trimmed and
// normalized; empty lines are skipped; ids are "<tag>-<ordinal>" in input
// order. Throws std::runtime_error on I/O failure or a line that fails
// normalization (names the 1-based line number).
std::vector<Statement> LoadCorpus(const std::string& path,
                                  const std::string& tag);

// Uniform sample without replacement, deterministic for a fixed seed, with
// the original relative order preserved. Throws std::out_of_range when
// n > corpus size.
std::vector<Statement> Sample(const std::vector<Statement>& corpus,
                              std::size_t n, std::uint64_t seed);

CorpusStats ComputeStats(const std::vector<Statement>& corpus);

// Stripped text per statement, ids and order preserved.
std::vector<std::pair<std::string, std::string>> StripCorpus(
    const std::vector<Statement>& corpus);

// Flat key/value CSV matching CorpusStats field names.
std::string StatsCsv(const CorpusStats& stats);

// Lowercased token with leading/trailing punctuation removed; empty when the
// token carries no letters or digits. Used for distinct-word counting.
std::string NormalizedWord(const std::string& token);

}  // namespace rodiac::corpus

#endif  // RODIAC_CORPUS_HPP_
