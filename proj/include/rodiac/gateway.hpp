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

#ifndef RODIAC_GATEWAY_HPP_
#define RODIAC_GATEWAY_HPP_

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <mutex>
#include <stdexcept>
#include <string>

namespace rodiac::gateway {

struct ModelEndpoint {
  std::string model_id;             // provider-qualified, e.g. "openai/gpt-4o"
  std::string base_url;             // e.g. "https://api.openai.com"
  std::string path = "/v1/chat/completions";
  std::string auth_env;             // environment variable holding the secret
  double temperature = 0.0;
  int max_output_tokens = 1024;
  double timeout_s = 60.0;
};

struct GatewayConfig {
  std::string cache_dir;
  int max_retries = 3;
  int backoff_initial_ms = 250;
  int max_in_flight = 4;     // bound on concurrent requests
  bool replay_only = false;  // serve from cache, never touch the network
};

struct Completion {
  std::string text;      // raw reply, leading/trailing whitespace trimmed
  double latency_ms = 0;
};

class GatewayError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};
class AuthError : public GatewayError {
  using GatewayError::GatewayError;
};
class ReplayMissError : public GatewayError {
  using GatewayError::GatewayError;
};

// Chat-completion client with retry/backoff, bounded concurrency and a
// file-per-key response cache. Thread-safe.
class Gateway {
 public:
  explicit Gateway(GatewayConfig config);

  // Single-turn user message; returns the raw reply trimmed. Retries
  // transport failures with exponential backoff, honors rate-limit delays,
  // fails fast on auth errors.
  Completion Complete(const ModelEndpoint& endpoint, const std::string& prompt);

  // Cache hit returns the stored reply with no network activity; a miss
  // delegates to Complete and persists the reply. Corrupt entries are
  // treated as misses and rewritten.
  Completion CachedComplete(const ModelEndpoint& endpoint,
                            const std::string& prompt);

  // Digest over (model_id, params, full prompt text).
  static std::string CacheKey(const ModelEndpoint& endpoint,
                              const std::string& prompt);

  std::size_t request_count() const { return requests_.load(); }

 private:
  Completion DoRequest(const ModelEndpoint& endpoint, const std::string& prompt);

  GatewayConfig config_;
  std::atomic<std::size_t> requests_{0};
  std::mutex cache_mutex_;
  std::mutex slot_mutex_;
  std::condition_variable slot_cv_;
  int slots_in_use_ = 0;
};

}  // namespace rodiac::gateway

#endif  // RODIAC_GATEWAY_HPP_
