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

#include "rodiac/restorers.hpp"

#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

namespace rodiac::restorers {

using json = nlohmann::json;

thread_local double ModelRestorer::last_latency_ms_ = 0;

std::string IdentityRestorer::Restore(const StrippedItem& item) {
  auto it = gold_by_id_.find(item.id);
  if (it == gold_by_id_.end()) {
    throw std::runtime_error("identity restorer has no gold text for id " +
                             item.id);
  }
  return it->second;
}

std::string SanitizeReply(const std::string& reply) {
  std::string s = reply;
  auto trim = [](std::string& t) {
    std::size_t b = t.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
      t.clear();
      return;
    }
    std::size_t e = t.find_last_not_of(" \t\r\n");
    t = t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.rfind("```", 0) == 0) {
    std::size_t first_nl = s.find('\n');
    std::size_t last_fence = s.rfind("```");
    if (first_nl != std::string::npos && last_fence > first_nl) {
      s = s.substr(first_nl + 1, last_fence - first_nl - 1);
      trim(s);
    }
  }
  if (s.rfind("OUTPUT:", 0) == 0) {
    s = s.substr(7);
    trim(s);
  }
  return s;
}

std::string ModelRestorer::Restore(const StrippedItem& item) {
  std::string prompt = prompts::Render(template_, item.input);
  gateway::Completion completion = gateway_.CachedComplete(endpoint_, prompt);
  last_latency_ms_ = completion.latency_ms;
  return sanitize_ ? SanitizeReply(completion.text) : completion.text;
}

std::vector<RestorationRecord> RunBatch(Restorer& restorer,
                                        const std::vector<StrippedItem>& items,
                                        int concurrency) {
  if (concurrency < 1) concurrency = 1;
  std::vector<RestorationRecord> records(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(concurrency)
#endif
  for (std::size_t i = 0; i < items.size(); ++i) {
    RestorationRecord& rec = records[i];
    rec.statement_id = items[i].id;
    rec.input = items[i].input;
    rec.restorer_id = restorer.id();
    rec.template_id = restorer.template_id();
    try {
      rec.output = restorer.Restore(items[i]);
      rec.latency_ms = restorer.last_latency_ms();
    } catch (const std::exception& e) {
      rec.failed = true;
      rec.output.clear();
      rec.error = e.what();
    }
  }
  return records;
}

std::string RecordsJsonl(const std::vector<RestorationRecord>& records,
                         const std::string& meta_json) {
  std::ostringstream os;
  os << meta_json << "\n";
  for (const RestorationRecord& r : records) {
    json row = {
        {"statement_id", r.statement_id},
        {"input", r.input},
        {"output", r.output},
        {"restorer_id", r.restorer_id},
        {"template_id", r.template_id},
        {"failed", r.failed},
        {"error", r.error},
        {"latency_ms", r.latency_ms},
    };
    os << row.dump() << "\n";
  }
  return os.str();
}

std::vector<RestorationRecord> ParseRecordsJsonl(const std::string& jsonl,
                                                 std::string* meta_json) {
  std::vector<RestorationRecord> records;
  std::istringstream in(jsonl);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (meta_json != nullptr) *meta_json = line;
      continue;
    }
    json row = json::parse(line);
    RestorationRecord rec;
    rec.statement_id = row.at("statement_id").get<std::string>();
    rec.input = row.at("input").get<std::string>();
    rec.output = row.at("output").get<std::string>();
    rec.restorer_id = row.at("restorer_id").get<std::string>();
    rec.template_id = row.at("template_id").get<std::string>();
    rec.failed = row.at("failed").get<bool>();
    rec.error = row.value("error", "");
    rec.latency_ms = row.value("latency_ms", 0.0);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace rodiac::restorers
