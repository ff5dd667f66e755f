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

#include "rodiac/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "rodiac/aggregate.hpp"
#include "rodiac/error_analysis.hpp"
#include "rodiac/metrics.hpp"
#include "rodiac/restorers.hpp"
#include "rodiac/textnorm.hpp"
#include "rodiac/util.hpp"

namespace rodiac::pipeline {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string MetaComment(const RunManifest& m, const std::string& model,
                        const std::string& tpl, const std::string& dataset) {
  std::ostringstream os;
  os << "# rodiac v" << util::kVersion << " manifest=" << m.digest;
  if (!model.empty()) os << " model=" << model;
  if (!tpl.empty()) os << " template=" << tpl;
  if (!dataset.empty()) os << " dataset=" << dataset;
  os << "\n";
  return os.str();
}

struct MetaFields {
  std::string model, template_id, dataset;
};

MetaFields ParseMetaComment(const std::string& line) {
  MetaFields fields;
  std::istringstream is(line);
  std::string token;
  while (is >> token) {
    if (token.rfind("model=", 0) == 0) fields.model = token.substr(6);
    if (token.rfind("template=", 0) == 0) fields.template_id = token.substr(9);
    if (token.rfind("dataset=", 0) == 0) fields.dataset = token.substr(8);
  }
  return fields;
}

// Record files carry the restorer id ("echo", "model:<model_id>"); score
// sheets carry the plain model name.
std::string ModelNameOf(const std::string& restorer_id) {
  if (restorer_id.rfind("model:", 0) == 0) return restorer_id.substr(6);
  return restorer_id;
}

prompts::PromptTemplate ResolveTemplate(const std::string& ref) {
  for (const prompts::PromptTemplate& t : prompts::BuiltinTemplates()) {
    if (t.id == ref) return t;
  }
  if (fs::exists(ref)) return prompts::LoadTemplateFile(ref);
  throw std::runtime_error("unknown template (not a builtin id or file): " +
                           ref);
}

std::vector<std::string> SortedFiles(const std::string& dir,
                                     const std::string& extension) {
  std::vector<std::string> files;
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == extension) {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

gateway::GatewayConfig GatewayConfigFor(const RunManifest& m) {
  gateway::GatewayConfig cfg;
  if (!m.replay_dir.empty()) {
    cfg.cache_dir = m.replay_dir;
    cfg.replay_only = true;
  } else {
    cfg.cache_dir = m.cache_dir;
  }
  cfg.max_in_flight = std::max(1, m.concurrency);
  return cfg;
}

std::string RecordsStem(const std::string& restorer_id,
                        const std::string& template_id,
                        const std::string& dataset) {
  return util::SafeName(restorer_id) + "__" + util::SafeName(template_id) +
         "__" + util::SafeName(dataset);
}

}  // namespace

RunManifest LoadManifest(const std::string& path) {
  std::string bytes = util::ReadFile(path);
  json doc;
  try {
    doc = json::parse(bytes);
  } catch (const json::exception& e) {
    throw std::runtime_error("manifest parse error in " + path + ": " +
                             e.what());
  }
  RunManifest m;
  m.digest = util::Sha256Hex(bytes);
  for (const json& ds : doc.value("datasets", json::array())) {
    m.datasets.push_back({ds.at("tag").get<std::string>(),
                          ds.at("path").get<std::string>()});
  }
  m.sample_size = doc.value("sample_size", 0u);
  m.seed = doc.value("seed", 0u);
  for (const json& t : doc.value("templates", json::array())) {
    m.templates.push_back(t.get<std::string>());
  }
  for (const json& ep : doc.value("endpoints", json::array())) {
    gateway::ModelEndpoint e;
    e.model_id = ep.at("model_id").get<std::string>();
    e.base_url = ep.value("base_url", "");
    e.path = ep.value("path", e.path);
    e.auth_env = ep.value("auth_env", "");
    e.temperature = ep.value("temperature", 0.0);
    e.max_output_tokens = ep.value("max_output_tokens", 1024);
    e.timeout_s = ep.value("timeout_s", 60.0);
    m.endpoints.push_back(std::move(e));
  }
  m.concurrency = doc.value("concurrency", 1);
  m.cache_dir = doc.value("cache_dir", "cache");
  m.output_dir = doc.value("output_dir", "out");
  m.sanitize = doc.value("sanitize", false);
  m.replay_dir = doc.value("replay_dir", "");
  return m;
}

std::vector<corpus::Statement> LoadDataset(const RunManifest& manifest,
                                           const DatasetSpec& spec) {
  std::vector<corpus::Statement> statements =
      corpus::LoadCorpus(spec.path, spec.tag);
  if (manifest.sample_size > 0 && manifest.sample_size < statements.size()) {
    statements = corpus::Sample(statements, manifest.sample_size, manifest.seed);
  }
  return statements;
}

corpus::CorpusStats CmdCorpusStats(const std::string& corpus_path,
                                   const std::string& tag,
                                   const std::string& output_path) {
  std::vector<corpus::Statement> statements =
      corpus::LoadCorpus(corpus_path, tag);
  corpus::CorpusStats stats = corpus::ComputeStats(statements);
  std::string csv = corpus::StatsCsv(stats);
  std::fputs(csv.c_str(), stdout);
  if (!output_path.empty()) util::WriteFile(output_path, csv);
  return stats;
}

void CmdSample(const std::string& corpus_path, const std::string& tag,
               std::size_t n, std::uint64_t seed,
               const std::string& output_path) {
  std::vector<corpus::Statement> statements =
      corpus::LoadCorpus(corpus_path, tag);
  std::vector<corpus::Statement> subset = corpus::Sample(statements, n, seed);
  std::ostringstream os;
  for (const corpus::Statement& st : subset) os << st.text << "\n";
  util::WriteFile(output_path, os.str());
}

void CmdStrip(const std::string& corpus_path, const std::string& output_path) {
  std::vector<corpus::Statement> statements =
      corpus::LoadCorpus(corpus_path, "strip");
  std::ostringstream os;
  for (const corpus::Statement& st : statements) {
    os << textnorm::StripDiacritics(st.text) << "\n";
  }
  util::WriteFile(output_path, os.str());
}

std::vector<std::string> CmdRun(const RunManifest& manifest) {
  // fail fast before any network call
  for (const DatasetSpec& ds : manifest.datasets) {
    if (!fs::exists(ds.path)) {
      throw std::runtime_error("dataset file missing: " + ds.path);
    }
  }
  std::vector<prompts::PromptTemplate> templates;
  for (const std::string& ref : manifest.templates) {
    templates.push_back(ResolveTemplate(ref));
  }
  if (manifest.replay_dir.empty()) {
    for (const gateway::ModelEndpoint& ep : manifest.endpoints) {
      if (!ep.auth_env.empty() && std::getenv(ep.auth_env.c_str()) == nullptr) {
        throw std::runtime_error("secret environment variable not set: " +
                                 ep.auth_env);
      }
    }
  }

  gateway::Gateway gw(GatewayConfigFor(manifest));
  const std::string records_dir = manifest.output_dir + "/records";
  fs::create_directories(records_dir);

  std::vector<std::string> written;
  for (const DatasetSpec& ds : manifest.datasets) {
    std::vector<corpus::Statement> statements = LoadDataset(manifest, ds);
    std::vector<restorers::StrippedItem> items;
    items.reserve(statements.size());
    for (const auto& [id, stripped] : corpus::StripCorpus(statements)) {
      items.push_back({id, stripped});
    }

    auto write_records = [&](restorers::Restorer& restorer) {
      std::vector<restorers::RestorationRecord> records =
          restorers::RunBatch(restorer, items, manifest.concurrency);
      json meta = {
          {"dataset", ds.tag},
          {"manifest", manifest.digest},
          {"restorer", restorer.id()},
          {"template", restorer.template_id()},
          {"version", util::kVersion},
      };
      std::string path =
          records_dir + "/" +
          RecordsStem(restorer.id(), restorer.template_id(), ds.tag) +
          ".jsonl";
      util::WriteFile(path, restorers::RecordsJsonl(records, meta.dump()));
      written.push_back(path);
    };

    restorers::EchoRestorer echo;  // baseline always included
    write_records(echo);
    for (const gateway::ModelEndpoint& ep : manifest.endpoints) {
      for (const prompts::PromptTemplate& tpl : templates) {
        restorers::ModelRestorer model(gw, ep, tpl, manifest.sanitize);
        write_records(model);
      }
    }
  }
  return written;
}

std::vector<std::string> CmdEval(const RunManifest& manifest) {
  std::unordered_map<std::string, std::unordered_map<std::string, std::string>>
      gold_by_dataset;
  for (const DatasetSpec& ds : manifest.datasets) {
    auto& map = gold_by_dataset[ds.tag];
    for (const corpus::Statement& st : LoadDataset(manifest, ds)) {
      map[st.id] = st.text;
    }
  }

  const std::string scores_dir = manifest.output_dir + "/scores";
  fs::create_directories(scores_dir);
  std::vector<std::string> written;
  for (const std::string& path :
       SortedFiles(manifest.output_dir + "/records", ".jsonl")) {
    std::string meta_line;
    std::vector<restorers::RestorationRecord> records =
        restorers::ParseRecordsJsonl(util::ReadFile(path), &meta_line);
    json meta = json::parse(meta_line);
    const std::string dataset = meta.at("dataset").get<std::string>();
    const std::string restorer = meta.at("restorer").get<std::string>();
    const std::string template_id = meta.at("template").get<std::string>();

    auto ds_it = gold_by_dataset.find(dataset);
    if (ds_it == gold_by_dataset.end()) {
      throw std::runtime_error("records reference unknown dataset '" + dataset +
                               "': " + path);
    }
    std::vector<std::string> missing;
    std::vector<metrics::EvalPair> pairs;
    pairs.reserve(records.size());
    for (const restorers::RestorationRecord& rec : records) {
      auto it = ds_it->second.find(rec.statement_id);
      if (it == ds_it->second.end()) {
        missing.push_back(rec.statement_id);
        continue;
      }
      pairs.push_back({rec.statement_id, it->second, rec.output});
    }
    if (!missing.empty()) {
      std::string list;
      for (const std::string& id : missing) list += " " + id;
      throw std::runtime_error("record ids missing from gold corpus:" + list);
    }

    std::vector<metrics::ScoreRecord> scores =
        metrics::EvaluatePairs(pairs, manifest.concurrency);
    std::string out_path =
        scores_dir + "/" + fs::path(path).stem().string() + ".csv";
    util::WriteFile(out_path, MetaComment(manifest, ModelNameOf(restorer),
                                          template_id, dataset) +
                                  metrics::ScoresCsv(scores));
    written.push_back(out_path);
  }
  if (written.empty()) {
    throw std::runtime_error("no record files under " + manifest.output_dir +
                             "/records; run the 'run' stage first");
  }
  return written;
}

namespace {

std::vector<aggregate::ScoreSlice> LoadSlices(const RunManifest& manifest) {
  std::vector<aggregate::ScoreSlice> slices;
  for (const std::string& path :
       SortedFiles(manifest.output_dir + "/scores", ".csv")) {
    std::string content = util::ReadFile(path);
    std::istringstream in(content);
    std::string first_line;
    std::getline(in, first_line);
    MetaFields meta = ParseMetaComment(first_line);
    if (meta.model.empty() || meta.dataset.empty()) {
      throw std::runtime_error("score file lacks a meta line: " + path);
    }
    aggregate::ScoreSlice slice;
    slice.model = meta.model;
    slice.template_id = meta.template_id;
    slice.dataset = meta.dataset;
    slice.records = metrics::ParseScoresCsv(content);
    slices.push_back(std::move(slice));
  }
  if (slices.empty()) {
    throw std::runtime_error("no score files under " + manifest.output_dir +
                             "/scores; run the 'eval' stage first");
  }
  return slices;
}

}  // namespace

std::vector<std::string> CmdAggregate(const RunManifest& manifest) {
  std::vector<aggregate::ScoreSlice> slices = LoadSlices(manifest);
  aggregate::AggregateReport report = aggregate::BuildReport(slices);
  if (report.rpr.empty()) {
    std::fprintf(stderr,
                 "warning: no echo baseline run found, RPR sheet omitted\n");
  }

  const std::string report_dir = manifest.output_dir + "/report";
  fs::create_directories(report_dir);
  const std::string tag = manifest.digest.substr(0, 12);
  std::vector<std::string> written;

  auto emit = [&](const std::string& name, const std::string& body) {
    std::string path = report_dir + "/" + name + "_" + tag +
                       (name == "report" ? ".txt" : ".csv");
    util::WriteFile(path, MetaComment(manifest, "", "", "") + body);
    written.push_back(path);
  };

  {
    std::ostringstream os;
    os << "model,template,dataset,evaluator,aps\n";
    for (const auto& [key, value] : report.aps) {
      const auto& [model, tpl, ds, evaluator] = key;
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", value);
      os << model << "," << tpl << "," << ds << ","
         << metrics::EvaluatorName(evaluator) << "," << buf << "\n";
    }
    emit("aps", os.str());
  }
  {
    std::ostringstream os;
    os << "model,template,tas\n";
    for (const auto& [key, value] : report.tas) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", value);
      os << key.first << "," << key.second << "," << buf << "\n";
    }
    emit("tas", os.str());
  }
  emit("summary", aggregate::SummaryCsv(report));
  emit("pivot", aggregate::PivotCsv(report));
  emit("report", aggregate::SummaryText(report));
  return written;
}

std::vector<std::string> CmdAnalyze(const RunManifest& manifest) {
  std::unordered_map<std::string, std::vector<corpus::Statement>> datasets;
  std::unordered_map<std::string, std::unordered_map<std::string, std::string>>
      gold_by_dataset;
  for (const DatasetSpec& ds : manifest.datasets) {
    datasets[ds.tag] = LoadDataset(manifest, ds);
    auto& map = gold_by_dataset[ds.tag];
    for (const corpus::Statement& st : datasets[ds.tag]) map[st.id] = st.text;
  }

  const std::string analysis_dir = manifest.output_dir + "/analysis";
  fs::create_directories(analysis_dir);
  std::vector<std::string> written;

  for (const auto& [tag, statements] : std::map<std::string,
           std::vector<corpus::Statement>>(datasets.begin(), datasets.end())) {
    std::string path = analysis_dir + "/gold_distribution__" +
                       util::SafeName(tag) + ".csv";
    util::WriteFile(path, MetaComment(manifest, "", "", tag) +
                              error_analysis::GoldDistributionCsv(
                                  error_analysis::ComputeGoldDistribution(
                                      statements)));
    written.push_back(path);
  }

  for (const std::string& path :
       SortedFiles(manifest.output_dir + "/records", ".jsonl")) {
    std::string meta_line;
    std::vector<restorers::RestorationRecord> records =
        restorers::ParseRecordsJsonl(util::ReadFile(path), &meta_line);
    json meta = json::parse(meta_line);
    const std::string dataset = meta.at("dataset").get<std::string>();
    const std::string restorer = meta.at("restorer").get<std::string>();
    const std::string template_id = meta.at("template").get<std::string>();

    auto ds_it = gold_by_dataset.find(dataset);
    if (ds_it == gold_by_dataset.end()) continue;
    std::vector<error_analysis::GoldOutputPair> pairs;
    pairs.reserve(records.size());
    for (const restorers::RestorationRecord& rec : records) {
      auto it = ds_it->second.find(rec.statement_id);
      if (it == ds_it->second.end()) continue;
      pairs.push_back({it->second, rec.output});
    }

    const std::string stem = fs::path(path).stem().string();
    const std::string model = ModelNameOf(restorer);
    auto emit = [&](const std::string& kind, const std::string& body) {
      std::string out_path = analysis_dir + "/" + stem + "." + kind + ".csv";
      util::WriteFile(out_path,
                      MetaComment(manifest, model, template_id, dataset) + body);
      written.push_back(out_path);
    };
    emit("confusion",
         error_analysis::ConfusionCsv(error_analysis::BuildConfusion(pairs)));
    emit("positions",
         error_analysis::PositionCsv(error_analysis::PositionRecall(pairs)));
    emit("generation",
         error_analysis::GenerationCsv(
             error_analysis::ComputeGenerationStats(pairs), model));
    emit("text_type",
         error_analysis::TextTypeCsv(error_analysis::SplitByTextType(pairs)));
  }
  return written;
}

std::string CmdReport(const RunManifest& manifest) {
  std::vector<aggregate::ScoreSlice> slices = LoadSlices(manifest);
  aggregate::AggregateReport report = aggregate::BuildReport(slices);
  return aggregate::SummaryText(report);
}

}  // namespace rodiac::pipeline
