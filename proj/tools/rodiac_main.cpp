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

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "rodiac/pipeline.hpp"
#include "rodiac/util.hpp"

namespace pl = rodiac::pipeline;

namespace {

struct ManifestArgs {
  std::string manifest_path;
  int concurrency = -1;
  std::string output_dir, cache_dir, replay_dir;
  long long sample = -1;
  long long seed = -1;
  bool sanitize = false;
};

void AddManifestOptions(CLI::App* cmd, ManifestArgs& args) {
  cmd->add_option("-m,--manifest", args.manifest_path, "run manifest (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("-j,--concurrency", args.concurrency,
                  "worker count (overrides manifest)");
  cmd->add_option("--output-dir", args.output_dir,
                  "artifact directory (overrides manifest)");
  cmd->add_option("--cache-dir", args.cache_dir,
                  "response cache directory (overrides manifest)");
  cmd->add_option("--replay", args.replay_dir,
                  "serve completions from this cache only, never the network");
  cmd->add_option("--sample", args.sample,
                  "statements per dataset, 0 = all (overrides manifest)");
  cmd->add_option("--seed", args.seed, "sampling seed (overrides manifest)");
  cmd->add_flag("--sanitize", args.sanitize,
                "strip code fences and OUTPUT: prefixes from replies");
}

pl::RunManifest ResolveManifest(const ManifestArgs& args) {
  pl::RunManifest manifest = pl::LoadManifest(args.manifest_path);
  if (args.concurrency >= 0) manifest.concurrency = args.concurrency;
  if (!args.output_dir.empty()) manifest.output_dir = args.output_dir;
  if (!args.cache_dir.empty()) manifest.cache_dir = args.cache_dir;
  if (!args.replay_dir.empty()) manifest.replay_dir = args.replay_dir;
  if (args.sample >= 0)
    manifest.sample_size = static_cast<std::size_t>(args.sample);
  if (args.seed >= 0) manifest.seed = static_cast<std::uint64_t>(args.seed);
  if (args.sanitize) manifest.sanitize = true;
  return manifest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Romanian diacritic restoration pipeline"};
  app.set_version_flag("--version", std::string("rodiac ") +
                                        rodiac::util::kVersion);
  app.require_subcommand(1);

  // corpus-stats
  std::string stats_corpus, stats_tag = "corpus", stats_out;
  CLI::App* stats = app.add_subcommand("corpus-stats", "corpus statistics");
  stats->add_option("corpus", stats_corpus, "corpus file, one statement/line")
      ->required()
      ->check(CLI::ExistingFile);
  stats->add_option("--tag", stats_tag, "dataset tag");
  stats->add_option("-o,--out", stats_out, "also write the CSV here");

  // sample
  std::string sample_corpus, sample_tag = "corpus", sample_out;
  std::size_t sample_n = 0;
  std::uint64_t sample_seed = 0;
  CLI::App* sample = app.add_subcommand("sample", "seeded subset of a corpus");
  sample->add_option("corpus", sample_corpus)->required()->check(
      CLI::ExistingFile);
  sample->add_option("-n,--n", sample_n, "subset size")->required();
  sample->add_option("--seed", sample_seed, "sampling seed");
  sample->add_option("--tag", sample_tag, "dataset tag");
  sample->add_option("-o,--out", sample_out, "output file")->required();

  // strip
  std::string strip_corpus, strip_out;
  CLI::App* strip = app.add_subcommand("strip", "remove all diacritics");
  strip->add_option("corpus", strip_corpus)->required()->check(
      CLI::ExistingFile);
  strip->add_option("-o,--out", strip_out, "output file")->required();

  ManifestArgs run_args, eval_args, agg_args, ana_args, rep_args;
  CLI::App* run =
      app.add_subcommand("run", "restore every dataset with every "
                                "(endpoint, template) pair plus echo");
  AddManifestOptions(run, run_args);
  CLI::App* eval =
      app.add_subcommand("eval", "score record files against the gold corpus");
  AddManifestOptions(eval, eval_args);
  CLI::App* agg = app.add_subcommand("aggregate",
                                     "APS/TAS/MTAS/RPR sheets and the pivot");
  AddManifestOptions(agg, agg_args);
  CLI::App* ana = app.add_subcommand(
      "analyze", "confusion/position/generation/text-type artifacts");
  AddManifestOptions(ana, ana_args);
  CLI::App* rep = app.add_subcommand("report", "plain-text ranking summary");
  AddManifestOptions(rep, rep_args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (stats->parsed()) {
      pl::CmdCorpusStats(stats_corpus, stats_tag, stats_out);
    } else if (sample->parsed()) {
      pl::CmdSample(sample_corpus, sample_tag, sample_n, sample_seed,
                    sample_out);
    } else if (strip->parsed()) {
      pl::CmdStrip(strip_corpus, strip_out);
    } else if (run->parsed()) {
      for (const std::string& f : pl::CmdRun(ResolveManifest(run_args)))
        std::printf("wrote %s\n", f.c_str());
    } else if (eval->parsed()) {
      for (const std::string& f : pl::CmdEval(ResolveManifest(eval_args)))
        std::printf("wrote %s\n", f.c_str());
    } else if (agg->parsed()) {
      for (const std::string& f : pl::CmdAggregate(ResolveManifest(agg_args)))
        std::printf("wrote %s\n", f.c_str());
    } else if (ana->parsed()) {
      for (const std::string& f : pl::CmdAnalyze(ResolveManifest(ana_args)))
        std::printf("wrote %s\n", f.c_str());
    } else if (rep->parsed()) {
      std::fputs(pl::CmdReport(ResolveManifest(rep_args)).c_str(), stdout);
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
