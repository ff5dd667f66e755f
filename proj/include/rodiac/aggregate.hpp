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

#ifndef RODIAC_AGGREGATE_HPP_
#define RODIAC_AGGREGATE_HPP_

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rodiac/metrics.hpp"

namespace rodiac::aggregate {

// Per-statement scores for one (model, template, dataset) run.
struct ScoreSlice {
  std::string model;     // "echo" or the model id
  std::string template_id;
  std::string dataset;
  std::vector<metrics::ScoreRecord> records;
};

struct AggregateReport {
  // (model, template, dataset, evaluator) -> mean score
  std::map<std::tuple<std::string, std::string, std::string, metrics::EvaluatorId>,
           double>
      aps;
  // (model, template) -> mean of the 8 x datasets APS values
  std::map<std::pair<std::string, std::string>, double> tas;
  // model -> (max TAS, argmax template; ties broken by template id)
  std::map<std::string, std::pair<double, std::string>> mtas;
  // model -> mtas(model) / mtas(echo); present only when echo ran
  std::map<std::string, double> rpr;
  std::vector<std::string> datasets;  // sorted tags seen in the input
};

// Arithmetic mean of per-statement scores; throws on an empty list.
double Aps(std::span<const double> scores);

// Mean of the APS values for one (model, template): 8 evaluators x the
// dataset count. The canonical cardinality is 16 (two datasets); any other
// count must be stated via expected_count (reduced-TAS mode).
double Tas(std::span<const double> aps_values, std::size_t expected_count = 16);

// Max TAS with its template id; lexicographically smallest template wins ties.
std::pair<double, std::string> Mtas(
    const std::map<std::string, double>& tas_by_template);

// model_mtas / echo_mtas; echo must be positive.
double Rpr(double model_mtas, double echo_mtas);

AggregateReport BuildReport(const std::vector<ScoreSlice>& slices);

// Appendix-style pivot: rows (developer, model, template), then the eight
// evaluator columns per dataset in sorted tag order, then TAS.
std::string PivotCsv(const AggregateReport& report);
// model, best template, MTAS, RPR.
std::string SummaryCsv(const AggregateReport& report);
// Plain-text rendering of the summary sheet.
std::string SummaryText(const AggregateReport& report);

// "openai/gpt-4o" -> "openai"; "echo" -> "baseline".
std::string DeveloperOf(const std::string& model);

// Half-up rounding to 3 decimals, the presentation precision.
double Round3(double v);

}  // namespace rodiac::aggregate

#endif  // RODIAC_AGGREGATE_HPP_
