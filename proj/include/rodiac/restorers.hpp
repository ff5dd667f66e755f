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

#ifndef RODIAC_RESTORERS_HPP_
#define RODIAC_RESTORERS_HPP_

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "rodiac/gateway.hpp"
#include "rodiac/prompts.hpp"

namespace rodiac::restorers {

struct StrippedItem {
  std::string id;
  std::string input;  // diacritics-stripped text
};

struct RestorationRecord {
  std::string statement_id;
  std::string input;
  std::string output;       // raw reply; empty when failed
  std::string restorer_id;  // echo | identity | model:<model_id>
  std::string template_id;  // "-" when no template applies
  bool failed = false;
  std::string error;
  double latency_ms = 0;  // reply latency; 0 for local restorers
};

// A restorer must be safe for concurrent Restore calls.
class Restorer {
 public:
  virtual ~Restorer() = default;
  virtual std::string id() const = 0;
  virtual std::string template_id() const { return "-"; }
  virtual std::string Restore(const StrippedItem& item) = 0;
  virtual double last_latency_ms() const { return 0; }
};

// Replicates the stripped input byte for byte.
class EchoRestorer : public Restorer {
 public:
  std::string id() const override { return "echo"; }
  std::string Restore(const StrippedItem& item) override { return item.input; }
};

// Returns the gold text; the metric-ceiling oracle for tests/calibration.
class IdentityRestorer : public Restorer {
 public:
  explicit IdentityRestorer(std::unordered_map<std::string, std::string> gold)
      : gold_by_id_(std::move(gold)) {}
  std::string id() const override { return "identity"; }
  std::string Restore(const StrippedItem& item) override;

 private:
  std::unordered_map<std::string, std::string> gold_by_id_;
};

// Renders the prompt template over the input and completes it through the
// gateway (cached). Raw reply, trimmed; optional sanitizer is opt-in.
class ModelRestorer : public Restorer {
 public:
  ModelRestorer(gateway::Gateway& gw, gateway::ModelEndpoint endpoint,
                prompts::PromptTemplate tpl, bool sanitize = false)
      : gateway_(gw),
        endpoint_(std::move(endpoint)),
        template_(std::move(tpl)),
        sanitize_(sanitize) {}
  std::string id() const override { return "model:" + endpoint_.model_id; }
  std::string template_id() const override { return template_.id; }
  std::string Restore(const StrippedItem& item) override;
  double last_latency_ms() const override { return last_latency_ms_; }

 private:
  gateway::Gateway& gateway_;
  gateway::ModelEndpoint endpoint_;
  prompts::PromptTemplate template_;
  bool sanitize_;
  thread_local static double last_latency_ms_;
};

// Drops an "OUTPUT:" prefix and surrounding code fences. Only applied when
// the --sanitize extension is enabled.
std::string SanitizeReply(const std::string& reply);

// One record per item, output order matches input order at any concurrency.
// Failures are recorded (failed=true, empty output) and the batch continues.
std::vector<RestorationRecord> RunBatch(Restorer& restorer,
                                        const std::vector<StrippedItem>& items,
                                        int concurrency);

// Line-delimited JSON persistence; first line is a meta object.
std::string RecordsJsonl(const std::vector<RestorationRecord>& records,
                         const std::string& meta_json);
std::vector<RestorationRecord> ParseRecordsJsonl(const std::string& jsonl,
                                                 std::string* meta_json = nullptr);

}  // namespace rodiac::restorers

#endif  // RODIAC_RESTORERS_HPP_
