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

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "rodiac/metrics.hpp"
#include "rodiac/textnorm.hpp"

using namespace rodiac;
using metrics::EvaluatorId;
using metrics::Level;

namespace {

// Independent oracle: plain memoized recursion straight from the definition.
std::size_t OracleLev(const std::u32string& a, const std::u32string& b,
                      std::size_t i, std::size_t j,
                      std::map<std::pair<std::size_t, std::size_t>,
                               std::size_t>& memo) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  auto it = memo.find({i, j});
  if (it != memo.end()) return it->second;
  std::size_t best = OracleLev(a, b, i + 1, j + 1, memo) +
                     (a[i] == b[j] ? 0 : 1);
  best = std::min(best, OracleLev(a, b, i + 1, j, memo) + 1);
  best = std::min(best, OracleLev(a, b, i, j + 1, memo) + 1);
  memo[{i, j}] = best;
  return best;
}

std::size_t OracleLev(const std::u32string& a, const std::u32string& b) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  return OracleLev(a, b, 0, 0, memo);
}

std::u32string RandomU32(std::mt19937_64& rng, int maxlen) {
  static const std::u32string alphabet = U"aăâsș ";
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::u32string s;
  int n = len(rng);
  for (int i = 0; i < n; ++i) s += alphabet[pick(rng)];
  return s;
}

// A plausible gold statement with diacritics and casing.
std::string RandomGold(std::mt19937_64& rng, int words) {
  static const std::vector<std::string> lexicon = {
      "țară", "mâine", "și",   "în",     "după", "copiii", "frumoasă",
      "Știu", "Âcest", "azi",  "pădure", "băiat", "între",  "fără"};
  std::uniform_int_distribution<std::size_t> pick(0, lexicon.size() - 1);
  std::string s;
  for (int i = 0; i < words; ++i) {
    if (i) s += ' ';
    s += lexicon[pick(rng)];
  }
  s += '.';
  return s;
}

}  // namespace

TEST_CASE("levenshtein basics") {
  using metrics::LevenshteinChars;
  CHECK(LevenshteinChars(U"abc", U"abc") == 0);
  CHECK(LevenshteinChars(U"", U"abc") == 3);
  CHECK(LevenshteinChars(U"abc", U"") == 3);
  CHECK(LevenshteinChars(U"maine", U"mâine") == 1);
  CHECK(LevenshteinChars(U"kitten", U"sitting") == 3);
}

TEST_CASE("levenshtein matches the recursive oracle on random pairs") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 500; ++i) {
    std::u32string a = RandomU32(rng, 12), b = RandomU32(rng, 12);
    CHECK(metrics::LevenshteinChars(a, b) == OracleLev(a, b));
  }
}

TEST_CASE("levenshtein symmetry and triangle inequality") {
  std::mt19937_64 rng(103);
  for (int i = 0; i < 300; ++i) {
    std::u32string a = RandomU32(rng, 10), b = RandomU32(rng, 10),
                   c = RandomU32(rng, 10);
    std::size_t ab = metrics::LevenshteinChars(a, b);
    CHECK(ab == metrics::LevenshteinChars(b, a));
    CHECK((ab == 0) == (a == b));
    CHECK(ab <= metrics::LevenshteinChars(a, c) +
                    metrics::LevenshteinChars(c, b));
  }
}

TEST_CASE("levenshtein spans the heap path past the stack buffer") {
  std::u32string a(100, U'a'), b(100, U'a');
  b[50] = U'b';
  CHECK(metrics::LevenshteinChars(a, b) == 1);
  CHECK(metrics::LevenshteinChars(a, std::u32string(130, U'a')) == 30);
}

TEST_CASE("word-level levenshtein") {
  CHECK(metrics::LevenshteinWords({"o", "zi"}, {"o", "zi"}) == 0);
  CHECK(metrics::LevenshteinWords({"o", "zi"}, {"o", "noapte"}) == 1);
  CHECK(metrics::LevenshteinWords({}, {"o", "zi"}) == 2);
}

TEST_CASE("restoration accuracy examples") {
  CHECK(metrics::RestorationAccuracy("Mâine", "Maine", true, Level::kChar) ==
        doctest::Approx(0.8));
  CHECK(metrics::RestorationAccuracy("orice", "orice", true, Level::kChar) ==
        1.0);
  CHECK(metrics::RestorationAccuracy("", "", true, Level::kChar) == 1.0);
  // token 0 differs only by case
  CHECK(metrics::RestorationAccuracy("Șapte zile", "șapte zile", false,
                                     Level::kWord) == 1.0);
  CHECK(metrics::RestorationAccuracy("Șapte zile", "șapte zile", true,
                                     Level::kWord) == doctest::Approx(0.5));
  // length mismatch divides by the longer side
  CHECK(metrics::RestorationAccuracy("abcd", "ab", true, Level::kChar) ==
        doctest::Approx(0.5));
  CHECK(metrics::RestorationAccuracy("ab", "abcd", true, Level::kChar) ==
        doctest::Approx(0.5));
}

TEST_CASE("restoration error score examples") {
  CHECK(metrics::RestorationErrorScore("Mâine", "Maine", true, Level::kChar) ==
        doctest::Approx(0.8));
  CHECK(metrics::RestorationErrorScore("x", "x", true, Level::kChar) == 1.0);
  CHECK(metrics::RestorationErrorScore("abc", "", true, Level::kChar) == 0.0);
  CHECK(metrics::RestorationErrorScore("", "", false, Level::kWord) == 1.0);
}

TEST_CASE("evaluate_all identity gives all ones") {
  auto scores = metrics::EvaluateAll("Mâine va fi o zi frumoasă.",
                                     "Mâine va fi o zi frumoasă.");
  for (double s : scores) CHECK(s == 1.0);
}

TEST_CASE("evaluate_all on the stripped appendix sentence") {
  std::string gold = "Mâine va fi o zi frumoasă.";
  auto scores = metrics::EvaluateAll(gold, textnorm::StripDiacritics(gold));
  // 2 diacritics among 26 code points
  CHECK(scores[int(EvaluatorId::kRaCsCl)] == doctest::Approx(24.0 / 26.0));
  CHECK(scores[int(EvaluatorId::kRerCsCl)] == doctest::Approx(24.0 / 26.0));
}

TEST_CASE("evaluate_all floors at zero for empty output") {
  auto scores = metrics::EvaluateAll("abc", "");
  for (double s : scores) CHECK(s == 0.0);
}

TEST_CASE("evaluate_all trims the output side only") {
  auto scores = metrics::EvaluateAll("azi", "  azi \n");
  for (double s : scores) CHECK(s == 1.0);
}

TEST_CASE("all scores stay in [0,1] and CI dominates CS") {
  std::mt19937_64 rng(107);
  for (int i = 0; i < 500; ++i) {
    std::string gold = textnorm::Normalize(RandomGold(rng, 5));
    // mutate: strip + random case flips + random truncation
    std::string out = textnorm::StripDiacritics(gold);
    if (i % 3 == 0) out = textnorm::ToLowerUtf8(out);
    if (i % 5 == 0 && out.size() > 4) out.resize(out.size() / 2);
    auto scores = metrics::EvaluateAll(gold, out);
    for (double s : scores) {
      CHECK(s >= 0.0);
      CHECK(s <= 1.0);
    }
    CHECK(scores[int(EvaluatorId::kRaCiCl)] >=
          scores[int(EvaluatorId::kRaCsCl)]);
    CHECK(scores[int(EvaluatorId::kRaCiWl)] >=
          scores[int(EvaluatorId::kRaCsWl)]);
    CHECK(scores[int(EvaluatorId::kRerCiCl)] >=
          scores[int(EvaluatorId::kRerCsCl)]);
    CHECK(scores[int(EvaluatorId::kRerCiWl)] >=
          scores[int(EvaluatorId::kRerCsWl)]);
  }
}

TEST_CASE("echo closed form on random gold statements") {
  std::mt19937_64 rng(109);
  for (int i = 0; i < 200; ++i) {
    std::string gold = textnorm::Normalize(RandomGold(rng, 6));
    std::string out = textnorm::StripDiacritics(gold);
    double len = double(textnorm::DecodeUtf8(gold).size());
    double d = double(textnorm::CountDiacritics(gold));
    double expected = (len - d) / len;
    auto scores = metrics::EvaluateAll(gold, out);
    CHECK(scores[int(EvaluatorId::kRaCsCl)] ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(scores[int(EvaluatorId::kRerCsCl)] ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("evaluator names follow the published identifiers") {
  CHECK(std::string(metrics::EvaluatorName(EvaluatorId::kRaCsCl)) ==
        "RA_CS_CL");
  CHECK(std::string(metrics::EvaluatorName(EvaluatorId::kRerCiWl)) ==
        "RER_CI_WL");
  CHECK(metrics::AllEvaluators().size() == 8);
}

TEST_CASE("parallel evaluation matches the serial reference") {
  std::mt19937_64 rng(113);
  std::vector<metrics::EvalPair> pairs;
  for (int i = 0; i < 200; ++i) {
    std::string gold = textnorm::Normalize(RandomGold(rng, 8));
    pairs.push_back({"id-" + std::to_string(i), gold,
                     textnorm::StripDiacritics(gold)});
  }
  auto serial = metrics::EvaluatePairsSerial(pairs);
  for (int threads : {1, 2, 8}) {
    auto parallel = metrics::EvaluatePairs(pairs, threads);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(parallel[i].statement_id == serial[i].statement_id);
      CHECK(parallel[i].scores == serial[i].scores);
    }
  }
}

TEST_CASE("scores csv round trip") {
  std::vector<metrics::EvalPair> pairs = {
      {"a-0", "țară", "tara"},
      {"a-1", "azi", "azi"},
  };
  auto records = metrics::EvaluatePairsSerial(pairs);
  std::string csv = metrics::ScoresCsv(records);
  CHECK(csv.find("statement_id") != std::string::npos);
  CHECK(csv.find("RA_CS_CL") != std::string::npos);
  auto parsed = metrics::ParseScoresCsv(csv);
  REQUIRE(parsed.size() == records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(parsed[i].statement_id == records[i].statement_id);
    for (int k = 0; k < metrics::kEvaluatorCount; ++k) {
      CHECK(parsed[i].scores[k] ==
            doctest::Approx(records[i].scores[k]).epsilon(1e-10));
    }
  }
}
