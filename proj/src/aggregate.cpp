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

#include "rodiac/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rodiac/util.hpp"

namespace rodiac::aggregate {

double Aps(std::span<const double> scores) {
  if (scores.empty()) throw std::invalid_argument("APS over an empty run");
  return util::StableMean(scores);
}

double Tas(std::span<const double> aps_values, std::size_t expected_count) {
  if (aps_values.size() != expected_count) {
    throw std::invalid_argument(
        "TAS expects " + std::to_string(expected_count) + " APS values, got " +
        std::to_string(aps_values.size()));
  }
  return util::StableMean(aps_values);
}

std::pair<double, std::string> Mtas(
    const std::map<std::string, double>& tas_by_template) {
  if (tas_by_template.empty()) {
    throw std::invalid_argument("MTAS over an empty template map");
  }
  // std::map iterates templates in id order, so the first strict maximum is
  // the lexicographic tie-winner.
  auto best = tas_by_template.begin();
  for (auto it = std::next(best); it != tas_by_template.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return {best->second, best->first};
}

double Rpr(double model_mtas, double echo_mtas) {
  if (echo_mtas <= 0) {
    throw std::invalid_argument("echo MTAS must be positive");
  }
  return model_mtas / echo_mtas;
}

std::string DeveloperOf(const std::string& model) {
  if (model == "echo" || model == "identity") return "baseline";
  std::size_t slash = model.find('/');
  return slash == std::string::npos ? model : model.substr(0, slash);
}

double Round3(double v) { return std::round(v * 1000.0) / 1000.0; }

AggregateReport BuildReport(const std::vector<ScoreSlice>& slices) {
  AggregateReport report;
  std::set<std::string> dataset_tags;
  for (const ScoreSlice& slice : slices) dataset_tags.insert(slice.dataset);
  report.datasets.assign(dataset_tags.begin(), dataset_tags.end());

  for (const ScoreSlice& slice : slices) {
    for (metrics::EvaluatorId id : metrics::AllEvaluators()) {
      std::vector<double> column;
      column.reserve(slice.records.size());
      for (const metrics::ScoreRecord& rec : slice.records) {
        column.push_back(rec.scores[static_cast<int>(id)]);
      }
      report.aps[{slice.model, slice.template_id, slice.dataset, id}] =
          Aps(column);
    }
  }

  // TAS per (model, template) from that pair's APS values over all datasets
  std::set<std::pair<std::string, std::string>> pairs;
  for (const ScoreSlice& slice : slices) {
    pairs.insert({slice.model, slice.template_id});
  }
  const std::size_t expected =
      metrics::kEvaluatorCount * report.datasets.size();
  for (const auto& [model, tpl] : pairs) {
    std::vector<double> values;
    for (const std::string& ds : report.datasets) {
      for (metrics::EvaluatorId id : metrics::AllEvaluators()) {
        auto it = report.aps.find({model, tpl, ds, id});
        if (it != report.aps.end()) values.push_back(it->second);
      }
    }
    report.tas[{model, tpl}] = Tas(values, std::min(expected, values.size()));
  }

  std::map<std::string, std::map<std::string, double>> by_model;
  for (const auto& [key, value] : report.tas) {
    by_model[key.first][key.second] = value;
  }
  for (const auto& [model, tas_map] : by_model) {
    report.mtas[model] = Mtas(tas_map);
  }

  auto echo_it = report.mtas.find("echo");
  if (echo_it != report.mtas.end() && echo_it->second.first > 0) {
    for (const auto& [model, best] : report.mtas) {
      report.rpr[model] = Rpr(best.first, echo_it->second.first);
    }
  }
  return report;
}

namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

std::string PivotCsv(const AggregateReport& report) {
  std::ostringstream os;
  os << "developer,model,template";
  for (const std::string& ds : report.datasets) {
    for (metrics::EvaluatorId id : metrics::AllEvaluators()) {
      os << "," << ds << "_" << metrics::EvaluatorName(id);
    }
  }
  os << ",TAS\n";
  for (const auto& [key, tas_value] : report.tas) {
    const auto& [model, tpl] = key;
    os << DeveloperOf(model) << "," << model << "," << tpl;
    for (const std::string& ds : report.datasets) {
      for (metrics::EvaluatorId id : metrics::AllEvaluators()) {
        auto it = report.aps.find({model, tpl, ds, id});
        os << "," << (it == report.aps.end() ? "" : Fmt(it->second));
      }
    }
    os << "," << Fmt(tas_value) << "\n";
  }
  return os.str();
}

std::string SummaryCsv(const AggregateReport& report) {
  std::ostringstream os;
  os << "developer,model,best_template,MTAS,RPR\n";
  for (const auto& [model, best] : report.mtas) {
    os << DeveloperOf(model) << "," << model << "," << best.second << ","
       << Fmt(best.first);
    auto it = report.rpr.find(model);
    if (it != report.rpr.end()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", it->second);
      os << "," << buf;
    } else {
      os << ",";
    }
    os << "\n";
  }
  return os.str();
}

std::string SummaryText(const AggregateReport& report) {
  std::ostringstream os;
  os << "model                                   best template                   "
        "   MTAS     RPR\n";
  // sort by MTAS descending for the reading order used in reports
  std::vector<std::pair<std::string, std::pair<double, std::string>>> rows(
      report.mtas.begin(), report.mtas.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second.first != b.second.first)
      return a.second.first > b.second.first;
    return a.first < b.first;
  });
  for (const auto& [model, best] : rows) {
    char line[160];
    auto it = report.rpr.find(model);
    if (it != report.rpr.end()) {
      std::snprintf(line, sizeof line, "%-39s %-34s %.4f   %.3f\n",
                    model.c_str(), best.second.c_str(), best.first, it->second);
    } else {
      std::snprintf(line, sizeof line, "%-39s %-34s %.4f       -\n",
                    model.c_str(), best.second.c_str(), best.first);
    }
    os << line;
  }
  return os.str();
}

}  // namespace rodiac::aggregate
