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

#ifndef RODIAC_PIPELINE_HPP_
#define RODIAC_PIPELINE_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "rodiac/corpus.hpp"
#include "rodiac/gateway.hpp"

namespace rodiac::pipeline {

struct DatasetSpec {
  std::string tag;
  std::string path;
};

// One manifest file drives the whole pipeline; flags may override fields.
struct RunManifest {
  std::vector<DatasetSpec> datasets;
  std::size_t sample_size = 0;  // 0 = whole corpus
  std::uint64_t seed = 0;
  std::vector<std::string> templates;  // builtin ids or template file paths
  std::vector<gateway::ModelEndpoint> endpoints;
  int concurrency = 1;
  std::string cache_dir = "cache";
  std::string output_dir = "out";
  bool sanitize = false;
  std::string replay_dir;  // non-empty: serve completions from this cache only

  std::string digest;  // sha256 of the manifest file bytes
};

RunManifest LoadManifest(const std::string& path);

// The dataset corpus as the pipeline sees it: loaded, then sampled when
// sample_size > 0.
std::vector<corpus::Statement> LoadDataset(const RunManifest& manifest,
                                           const DatasetSpec& spec);

// corpus-stats: prints and writes CorpusStats for one corpus file.
corpus::CorpusStats CmdCorpusStats(const std::string& corpus_path,
                                   const std::string& tag,
                                   const std::string& output_path);

// sample: writes the seeded subset, one statement per line.
void CmdSample(const std::string& corpus_path, const std::string& tag,
               std::size_t n, std::uint64_t seed,
               const std::string& output_path);

// strip: writes the diacritics-stripped corpus, one statement per line.
void CmdStrip(const std::string& corpus_path, const std::string& output_path);

// run: echo baseline plus every (endpoint, template) pair over every
// dataset; record files under <output_dir>/records/.
std::vector<std::string> CmdRun(const RunManifest& manifest);

// eval: scores each record file against the gold corpus; score files under
// <output_dir>/scores/.
std::vector<std::string> CmdEval(const RunManifest& manifest);

// aggregate: APS/TAS/MTAS/RPR sheets and the pivot under
// <output_dir>/report/.
std::vector<std::string> CmdAggregate(const RunManifest& manifest);

// analyze: confusion, position, generation and text-type artifacts under
// <output_dir>/analysis/.
std::vector<std::string> CmdAnalyze(const RunManifest& manifest);

// report: renders the plain-text summary from the aggregate sheets.
std::string CmdReport(const RunManifest& manifest);

}  // namespace rodiac::pipeline

#endif  // RODIAC_PIPELINE_HPP_
