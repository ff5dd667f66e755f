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

#ifndef RODIAC_ERROR_ANALYSIS_HPP_
#define RODIAC_ERROR_ANALYSIS_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rodiac/corpus.hpp"

namespace rodiac::error_analysis {

struct GoldOutputPair {
  std::string gold;
  std::string output;
};

// Diacritic-level confusion over skeleton-aligned pairs. Keys are
// (gold letter, produced letter); gold diacritic positions always
// contribute, gold base-letter positions contribute only when the output
// over-generated a diacritic there.
struct ConfusionMatrix {
  std::map<std::pair<char32_t, char32_t>, std::size_t> counts;
  std::size_t alignable = 0;
  std::size_t unalignable = 0;

  void Merge(const ConfusionMatrix& other);
};

// Adds the pair to the matrix when strip(gold) and strip(normalize(output))
// are code-point-identical; otherwise bumps unalignable. Returns whether the
// pair was alignable.
bool AlignAndConfuse(const std::string& gold, const std::string& output,
                     ConfusionMatrix& matrix);

ConfusionMatrix BuildConfusion(const std::vector<GoldOutputPair>& pairs);

struct PositionCell {
  std::size_t gold = 0;
  std::size_t correct = 0;
  double Recall() const {
    return gold == 0 ? 0.0 : static_cast<double>(correct) / gold;
  }
};

// position class name -> letter -> (gold count, correct count). Computed on
// alignable pairs only.
using PositionStats = std::map<std::string, std::map<char32_t, PositionCell>>;

PositionStats PositionRecall(const std::vector<GoldOutputPair>& pairs);

struct GenerationStats {
  double avg_diacritics_per_sample = 0;
  std::size_t total_added = 0;
  std::vector<std::pair<char32_t, std::size_t>> top3;  // most produced marks
  double expected_per_sample = 0;                      // gold mean
};

// Counts produced diacritic marks; works on unalignable pairs too.
GenerationStats ComputeGenerationStats(const std::vector<GoldOutputPair>& pairs);

struct TextTypeSplit {
  std::size_t single_count = 0;
  std::size_t multi_count = 0;
  double single_mean_error = 0;  // mean of 1 - RA_CS_CL
  double multi_mean_error = 0;
  std::optional<double> relative_delta;  // (multi - single) / single
};

TextTypeSplit SplitByTextType(const std::vector<GoldOutputPair>& pairs);

struct LetterShare {
  std::size_t count = 0;
  double share = 0;
};

struct GoldDistribution {
  std::map<char32_t, LetterShare> per_letter;  // the 10 cased letters
  std::map<char32_t, LetterShare> per_family;  // case-folded, 5 letters
  std::size_t total = 0;
};

GoldDistribution ComputeGoldDistribution(
    const std::vector<corpus::Statement>& statements);

// CSV renderings.
std::string ConfusionCsv(const ConfusionMatrix& matrix);
std::string PositionCsv(const PositionStats& stats);
std::string GenerationCsv(const GenerationStats& stats,
                          const std::string& model);
std::string TextTypeCsv(const TextTypeSplit& split);
std::string GoldDistributionCsv(const GoldDistribution& dist);

}  // namespace rodiac::error_analysis

#endif  // RODIAC_ERROR_ANALYSIS_HPP_
