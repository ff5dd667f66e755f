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

// Compares the serial evaluation reference with the OpenMP kernel on a
// synthetic Romanian-like corpus and checks they agree bit for bit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include <omp.h>

#include "rodiac/metrics.hpp"
#include "rodiac/textnorm.hpp"

namespace {

using Clock = std::chrono::steady_clock;

std::string RandomStatement(std::mt19937_64& rng, int words) {
  static const std::vector<std::string> lexicon = {
      "și",  "în",      "țară",   "mâine", "când",   "copiii", "după",
      "ani", "orașul",  "pădure", "fără",  "întâi",  "astăzi", "românesc",
      "ştiinţă",  // legacy cedillas, normalized downstream
      "casa", "mare", "peste", "drum", "timp"};
  std::uniform_int_distribution<std::size_t> pick(0, lexicon.size() - 1);
  std::string out;
  for (int i = 0; i < words; ++i) {
    if (i) out += ' ';
    out += lexicon[pick(rng)];
  }
  out += '.';
  return out;
}

double MillisSince(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  int words = argc > 2 ? std::atoi(argv[2]) : 12;

  std::mt19937_64 rng(20260824);
  std::vector<rodiac::metrics::EvalPair> pairs;
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string gold = rodiac::textnorm::Normalize(RandomStatement(rng, words));
    pairs.push_back({"bench-" + std::to_string(i), gold,
                     rodiac::textnorm::StripDiacritics(gold)});
  }

  auto t0 = Clock::now();
  auto serial = rodiac::metrics::EvaluatePairsSerial(pairs);
  double serial_ms = MillisSince(t0);

  std::printf("statements            %zu (x%d evaluators)\n", n,
              rodiac::metrics::kEvaluatorCount);
  std::printf("serial reference      %8.1f ms\n", serial_ms);

  for (int threads : {1, 2, 4, 8}) {
    if (threads > omp_get_max_threads() && threads != 1) {
      std::printf("omp %-2d threads        skipped (max %d)\n", threads,
                  omp_get_max_threads());
      continue;
    }
    t0 = Clock::now();
    auto parallel = rodiac::metrics::EvaluatePairs(pairs, threads);
    double par_ms = MillisSince(t0);
    bool same = parallel.size() == serial.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i) {
      same = serial[i].statement_id == parallel[i].statement_id &&
             serial[i].scores == parallel[i].scores;
    }
    std::printf("omp %-2d threads        %8.1f ms  speedup %.2fx  %s\n",
                threads, par_ms, serial_ms / par_ms,
                same ? "match" : "MISMATCH");
    if (!same) return 1;
  }
  return 0;
}
