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

#include "rodiac/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rodiac/textnorm.hpp"

namespace rodiac::metrics {

namespace {

const std::array<EvaluatorId, kEvaluatorCount> kAll = {
    EvaluatorId::kRaCsCl,  EvaluatorId::kRaCiCl,  EvaluatorId::kRaCsWl,
    EvaluatorId::kRaCiWl,  EvaluatorId::kRerCsCl, EvaluatorId::kRerCiCl,
    EvaluatorId::kRerCsWl, EvaluatorId::kRerCiWl,
};

const char* kNames[kEvaluatorCount] = {
    "RA_CS_CL",  "RA_CI_CL",  "RA_CS_WL",  "RA_CI_WL",
    "RER_CS_CL", "RER_CI_CL", "RER_CS_WL", "RER_CI_WL",
};

std::string_view TrimView(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r\n\f\v");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(b, e - b + 1);
}

double PositionalMatch(std::u32string_view a, std::u32string_view b) {
  std::size_t longer = std::max(a.size(), b.size());
  if (longer == 0) return 1.0;
  std::size_t shorter = std::min(a.size(), b.size());
  std::size_t matches = 0;
  for (std::size_t i = 0; i < shorter; ++i) {
    if (a[i] == b[i]) ++matches;
  }
  return static_cast<double>(matches) / static_cast<double>(longer);
}

double PositionalMatch(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::size_t longer = std::max(a.size(), b.size());
  if (longer == 0) return 1.0;
  std::size_t shorter = std::min(a.size(), b.size());
  std::size_t matches = 0;
  for (std::size_t i = 0; i < shorter; ++i) {
    if (a[i] == b[i]) ++matches;
  }
  return static_cast<double>(matches) / static_cast<double>(longer);
}

std::vector<std::string> LowerTokens(std::vector<std::string> tokens) {
  for (std::string& t : tokens) t = textnorm::ToLowerUtf8(t);
  return tokens;
}

}  // namespace

const char* EvaluatorName(EvaluatorId id) {
  return kNames[static_cast<int>(id)];
}

const std::array<EvaluatorId, kEvaluatorCount>& AllEvaluators() { return kAll; }

std::size_t LevenshteinChars(std::u32string_view a, std::u32string_view b) {
  return Levenshtein(a, b);
}

std::size_t LevenshteinWords(const std::vector<std::string>& a,
                             const std::vector<std::string>& b) {
  return Levenshtein(a, b);
}

double RestorationAccuracy(std::string_view ref, std::string_view out,
                           bool case_sensitive, Level level) {
  if (level == Level::kChar) {
    std::u32string r = textnorm::DecodeUtf8(ref);
    std::u32string o = textnorm::DecodeUtf8(out);
    if (!case_sensitive) {
      r = textnorm::ToLower(r);
      o = textnorm::ToLower(o);
    }
    return PositionalMatch(std::u32string_view(r), std::u32string_view(o));
  }
  std::vector<std::string> r = textnorm::Tokenize(ref);
  std::vector<std::string> o = textnorm::Tokenize(out);
  if (!case_sensitive) {
    r = LowerTokens(std::move(r));
    o = LowerTokens(std::move(o));
  }
  return PositionalMatch(r, o);
}

double RestorationErrorScore(std::string_view ref, std::string_view out,
                             bool case_sensitive, Level level) {
  std::size_t dist, longer;
  if (level == Level::kChar) {
    std::u32string r = textnorm::DecodeUtf8(ref);
    std::u32string o = textnorm::DecodeUtf8(out);
    if (!case_sensitive) {
      r = textnorm::ToLower(r);
      o = textnorm::ToLower(o);
    }
    dist = Levenshtein(r, o);
    longer = std::max(r.size(), o.size());
  } else {
    std::vector<std::string> r = textnorm::Tokenize(ref);
    std::vector<std::string> o = textnorm::Tokenize(out);
    if (!case_sensitive) {
      r = LowerTokens(std::move(r));
      o = LowerTokens(std::move(o));
    }
    dist = Levenshtein(r, o);
    longer = std::max(r.size(), o.size());
  }
  if (longer == 0) return 1.0;
  return 1.0 - static_cast<double>(dist) / static_cast<double>(longer);
}

std::array<double, kEvaluatorCount> EvaluateAll(std::string_view ref,
                                                std::string_view out) {
  std::string_view o = TrimView(out);
  std::array<double, kEvaluatorCount> s{};
  s[static_cast<int>(EvaluatorId::kRaCsCl)] =
      RestorationAccuracy(ref, o, true, Level::kChar);
  s[static_cast<int>(EvaluatorId::kRaCiCl)] =
      RestorationAccuracy(ref, o, false, Level::kChar);
  s[static_cast<int>(EvaluatorId::kRaCsWl)] =
      RestorationAccuracy(ref, o, true, Level::kWord);
  s[static_cast<int>(EvaluatorId::kRaCiWl)] =
      RestorationAccuracy(ref, o, false, Level::kWord);
  s[static_cast<int>(EvaluatorId::kRerCsCl)] =
      RestorationErrorScore(ref, o, true, Level::kChar);
  s[static_cast<int>(EvaluatorId::kRerCiCl)] =
      RestorationErrorScore(ref, o, false, Level::kChar);
  s[static_cast<int>(EvaluatorId::kRerCsWl)] =
      RestorationErrorScore(ref, o, true, Level::kWord);
  s[static_cast<int>(EvaluatorId::kRerCiWl)] =
      RestorationErrorScore(ref, o, false, Level::kWord);
  return s;
}

std::vector<ScoreRecord> EvaluatePairsSerial(
    const std::vector<EvalPair>& pairs) {
  std::vector<ScoreRecord> records(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    records[i].statement_id = pairs[i].statement_id;
    records[i].scores = EvaluateAll(pairs[i].gold, pairs[i].output);
  }
  return records;
}

std::vector<ScoreRecord> EvaluatePairs(const std::vector<EvalPair>& pairs,
                                       int threads) {
  std::vector<ScoreRecord> records(pairs.size());
#ifdef _OPENMP
  if (threads <= 0) threads = omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    records[i].statement_id = pairs[i].statement_id;
    records[i].scores = EvaluateAll(pairs[i].gold, pairs[i].output);
  }
#else
  (void)threads;
  records = EvaluatePairsSerial(pairs);
#endif
  return records;
}

std::string ScoresCsv(const std::vector<ScoreRecord>& records) {
  std::ostringstream os;
  os << "statement_id";
  for (EvaluatorId id : kAll) os << "," << EvaluatorName(id);
  os << "\n";
  char buf[32];
  for (const ScoreRecord& r : records) {
    os << r.statement_id;
    for (double v : r.scores) {
      std::snprintf(buf, sizeof buf, "%.12f", v);
      os << "," << buf;
    }
    os << "\n";
  }
  return os.str();
}

std::vector<ScoreRecord> ParseScoresCsv(const std::string& csv) {
  std::vector<ScoreRecord> records;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // first non-comment line is the header
      continue;
    }
    ScoreRecord rec;
    std::istringstream ls(line);
    std::string field;
    if (!std::getline(ls, field, ',')) continue;
    rec.statement_id = field;
    for (int k = 0; k < kEvaluatorCount; ++k) {
      if (!std::getline(ls, field, ',')) {
        throw std::runtime_error("malformed score row: " + line);
      }
      rec.scores[k] = std::stod(field);
    }
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace rodiac::metrics
