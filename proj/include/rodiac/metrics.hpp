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

#ifndef RODIAC_METRICS_HPP_
#define RODIAC_METRICS_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rodiac::metrics {

// The eight evaluators: restoration accuracy (RA) and restoration error
// rate reported as a similarity (RER), each case-sensitive/insensitive and
// at character/word level.
enum class EvaluatorId {
  kRaCsCl = 0,
  kRaCiCl,
  kRaCsWl,
  kRaCiWl,
  kRerCsCl,
  kRerCiCl,
  kRerCsWl,
  kRerCiWl,
};
inline constexpr int kEvaluatorCount = 8;
const char* EvaluatorName(EvaluatorId id);
const std::array<EvaluatorId, kEvaluatorCount>& AllEvaluators();

struct ScoreRecord {
  std::string statement_id;
  std::array<double, kEvaluatorCount> scores{};  // indexed by EvaluatorId
};

enum class Level { kChar, kWord };

// Minimum number of insertions, deletions and substitutions turning a into
// b. Two-row dynamic program, no heap traffic for short inputs.
template <typename Seq>
std::size_t Levenshtein(const Seq& a, const Seq& b) {
  const std::size_t la = a.size(), lb = b.size();
  if (la == 0) return lb;
  if (lb == 0) return la;
  constexpr std::size_t kStack = 64;
  std::size_t stack_row[kStack + 1];
  std::vector<std::size_t> heap_row;
  std::size_t* row = stack_row;
  if (lb > kStack) {
    heap_row.resize(lb + 1);
    row = heap_row.data();
  }
  for (std::size_t j = 0; j <= lb; ++j) row[j] = j;
  for (std::size_t i = 1; i <= la; ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= lb; ++j) {
      std::size_t cur = row[j];
      std::size_t sub = prev + (a[i - 1] == b[j - 1] ? 0 : 1);
      std::size_t del = row[j - 1] + 1;
      std::size_t ins = cur + 1;
      std::size_t best = sub < del ? sub : del;
      row[j] = ins < best ? ins : best;
      prev = cur;
    }
  }
  return row[lb];
}

std::size_t LevenshteinChars(std::u32string_view a, std::u32string_view b);
std::size_t LevenshteinWords(const std::vector<std::string>& a,
                             const std::vector<std::string>& b);

// Positional match ratio: matches at aligned positions divided by the longer
// length. Both empty -> 1.0.
double RestorationAccuracy(std::string_view ref, std::string_view out,
                           bool case_sensitive, Level level);

// 1 - lev(ref, out) / max length; higher is better. Both empty -> 1.0.
double RestorationErrorScore(std::string_view ref, std::string_view out,
                             bool case_sensitive, Level level);

// All eight evaluators for one (reference, output) pair. The output side is
// trimmed of leading/trailing whitespace first; nothing else is touched.
std::array<double, kEvaluatorCount> EvaluateAll(std::string_view ref,
                                                std::string_view out);

// Per-statement evaluation of (id, gold, output) triples.
struct EvalPair {
  std::string statement_id;
  std::string gold;
  std::string output;
};
// Serial reference implementation.
std::vector<ScoreRecord> EvaluatePairsSerial(const std::vector<EvalPair>& pairs);
// OpenMP kernel; identical results to the serial reference.
std::vector<ScoreRecord> EvaluatePairs(const std::vector<EvalPair>& pairs,
                                       int threads = 0);

// CSV with a statement_id column and the eight named score columns.
std::string ScoresCsv(const std::vector<ScoreRecord>& records);
std::vector<ScoreRecord> ParseScoresCsv(const std::string& csv);

}  // namespace rodiac::metrics

#endif  // RODIAC_METRICS_HPP_
