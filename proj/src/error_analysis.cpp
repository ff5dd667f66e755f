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

#include "rodiac/error_analysis.hpp"

#include <algorithm>
#include <sstream>

#include "rodiac/metrics.hpp"
#include "rodiac/textnorm.hpp"

namespace rodiac::error_analysis {

namespace tn = textnorm;

void ConfusionMatrix::Merge(const ConfusionMatrix& other) {
  for (const auto& [key, n] : other.counts) counts[key] += n;
  alignable += other.alignable;
  unalignable += other.unalignable;
}

namespace {

// Positions align when the stripped letters agree, or when both sides carry
// a diacritic letter (a rule-sensitive substitution like â -> î changes the
// base letter yet is still a one-position confusion).
bool SkeletonsAlign(const std::u32string& g, const std::u32string& o) {
  if (g.size() != o.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (tn::BaseLetter(g[i]) == tn::BaseLetter(o[i])) continue;
    if (tn::IsDiacritic(g[i]) && tn::IsDiacritic(o[i])) continue;
    return false;
  }
  return true;
}

}  // namespace

bool AlignAndConfuse(const std::string& gold, const std::string& output,
                     ConfusionMatrix& matrix) {
  std::u32string g = tn::DecodeUtf8(gold);
  std::u32string o = tn::DecodeUtf8(tn::Normalize(output));
  if (!SkeletonsAlign(g, o)) {
    ++matrix.unalignable;
    return false;
  }
  ++matrix.alignable;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (tn::IsDiacritic(g[i])) {
      ++matrix.counts[{g[i], o[i]}];
    } else if (tn::IsDiacritic(o[i])) {
      ++matrix.counts[{g[i], o[i]}];  // over-generation: base -> diacritic
    }
  }
  return true;
}

ConfusionMatrix BuildConfusion(const std::vector<GoldOutputPair>& pairs) {
  ConfusionMatrix matrix;
  for (const GoldOutputPair& p : pairs) {
    AlignAndConfuse(p.gold, p.output, matrix);
  }
  return matrix;
}

PositionStats PositionRecall(const std::vector<GoldOutputPair>& pairs) {
  PositionStats stats;
  for (const GoldOutputPair& p : pairs) {
    std::u32string g = tn::DecodeUtf8(p.gold);
    std::u32string o = tn::DecodeUtf8(tn::Normalize(p.output));
    if (!SkeletonsAlign(g, o)) continue;  // alignable pairs only
    for (const tn::DiacriticOccurrence& occ : tn::DiacriticOccurrences(p.gold)) {
      PositionCell& cell =
          stats[tn::PositionClassName(occ.position_class)][occ.letter];
      ++cell.gold;
      if (o[occ.char_index] == occ.letter) ++cell.correct;
    }
  }
  return stats;
}

GenerationStats ComputeGenerationStats(const std::vector<GoldOutputPair>& pairs) {
  GenerationStats stats;
  std::map<char32_t, std::size_t> produced;
  std::size_t gold_total = 0;
  for (const GoldOutputPair& p : pairs) {
    for (char32_t cp : tn::DecodeUtf8(tn::Normalize(p.output))) {
      if (tn::IsDiacritic(cp)) {
        ++stats.total_added;
        ++produced[cp];
      }
    }
    gold_total += tn::CountDiacritics(p.gold);
  }
  if (!pairs.empty()) {
    stats.avg_diacritics_per_sample =
        static_cast<double>(stats.total_added) / pairs.size();
    stats.expected_per_sample = static_cast<double>(gold_total) / pairs.size();
  }
  std::vector<std::pair<char32_t, std::size_t>> ranked(produced.begin(),
                                                       produced.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > 3) ranked.resize(3);
  stats.top3 = std::move(ranked);
  return stats;
}

TextTypeSplit SplitByTextType(const std::vector<GoldOutputPair>& pairs) {
  TextTypeSplit split;
  double single_sum = 0, multi_sum = 0;
  for (const GoldOutputPair& p : pairs) {
    double error = 1.0 - metrics::RestorationAccuracy(p.gold, p.output, true,
                                                      metrics::Level::kChar);
    if (tn::SentenceCount(p.gold) <= 1) {
      ++split.single_count;
      single_sum += error;
    } else {
      ++split.multi_count;
      multi_sum += error;
    }
  }
  if (split.single_count > 0) split.single_mean_error = single_sum / split.single_count;
  if (split.multi_count > 0) split.multi_mean_error = multi_sum / split.multi_count;
  if (split.single_count > 0 && split.multi_count > 0 &&
      split.single_mean_error > 0) {
    split.relative_delta =
        (split.multi_mean_error - split.single_mean_error) /
        split.single_mean_error;
  }
  return split;
}

GoldDistribution ComputeGoldDistribution(
    const std::vector<corpus::Statement>& statements) {
  GoldDistribution dist;
  for (const corpus::Statement& st : statements) {
    for (char32_t cp : tn::DecodeUtf8(st.text)) {
      if (!tn::IsDiacritic(cp)) continue;
      ++dist.per_letter[cp].count;
      ++dist.per_family[tn::ToLower(cp)].count;
      ++dist.total;
    }
  }
  if (dist.total > 0) {
    for (auto& [cp, cell] : dist.per_letter) {
      cell.share = static_cast<double>(cell.count) / dist.total;
    }
    for (auto& [cp, cell] : dist.per_family) {
      cell.share = static_cast<double>(cell.count) / dist.total;
    }
  }
  return dist;
}

namespace {

std::string Cp(char32_t cp) { return tn::EncodeUtf8(std::u32string(1, cp)); }

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string ConfusionCsv(const ConfusionMatrix& matrix) {
  // columns = every produced letter observed, rows = gold letters
  std::ostringstream os;
  std::vector<char32_t> golds, produced;
  for (const auto& [key, n] : matrix.counts) {
    if (std::find(golds.begin(), golds.end(), key.first) == golds.end())
      golds.push_back(key.first);
    if (std::find(produced.begin(), produced.end(), key.second) ==
        produced.end())
      produced.push_back(key.second);
  }
  std::sort(golds.begin(), golds.end());
  std::sort(produced.begin(), produced.end());
  os << "gold";
  for (char32_t p : produced) os << "," << Cp(p);
  os << "\n";
  for (char32_t g : golds) {
    os << Cp(g);
    for (char32_t p : produced) {
      auto it = matrix.counts.find({g, p});
      os << "," << (it == matrix.counts.end() ? 0 : it->second);
    }
    os << "\n";
  }
  os << "# alignable=" << matrix.alignable
     << " unalignable=" << matrix.unalignable << "\n";
  return os.str();
}

std::string PositionCsv(const PositionStats& stats) {
  std::ostringstream os;
  os << "position_class,letter,gold,correct,recall\n";
  for (const auto& [pc, letters] : stats) {
    for (const auto& [letter, cell] : letters) {
      os << pc << "," << Cp(letter) << "," << cell.gold << "," << cell.correct
         << "," << Fmt(cell.Recall()) << "\n";
    }
  }
  return os.str();
}

std::string GenerationCsv(const GenerationStats& stats,
                          const std::string& model) {
  std::ostringstream os;
  os << "model,avg_diacritics_per_sample,total_added,expected_per_sample,"
        "top1,top1_count,top2,top2_count,top3,top3_count\n";
  os << model << "," << Fmt(stats.avg_diacritics_per_sample) << ","
     << stats.total_added << "," << Fmt(stats.expected_per_sample);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i < stats.top3.size()) {
      os << "," << Cp(stats.top3[i].first) << "," << stats.top3[i].second;
    } else {
      os << ",,0";
    }
  }
  os << "\n";
  return os.str();
}

std::string TextTypeCsv(const TextTypeSplit& split) {
  std::ostringstream os;
  os << "bucket,count,mean_error\n";
  os << "single-sentence," << split.single_count << ","
     << Fmt(split.single_mean_error) << "\n";
  os << "multi-sentence," << split.multi_count << ","
     << Fmt(split.multi_mean_error) << "\n";
  os << "relative_delta,,"
     << (split.relative_delta ? Fmt(*split.relative_delta) : "n/a") << "\n";
  os << "# error measure: 1 - RA_CS_CL\n";
  return os.str();
}

std::string GoldDistributionCsv(const GoldDistribution& dist) {
  std::ostringstream os;
  os << "view,letter,count,share\n";
  for (const auto& [cp, cell] : dist.per_letter) {
    os << "cased," << Cp(cp) << "," << cell.count << "," << Fmt(cell.share)
       << "\n";
  }
  for (const auto& [cp, cell] : dist.per_family) {
    os << "family," << Cp(cp) << "," << cell.count << "," << Fmt(cell.share)
       << "\n";
  }
  os << "# total=" << dist.total << "\n";
  return os.str();
}

}  // namespace rodiac::error_analysis
