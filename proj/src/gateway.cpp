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

#include "rodiac/gateway.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "rodiac/util.hpp"

namespace rodiac::gateway {

namespace {

using json = nlohmann::json;

std::string Trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n\f\v");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n\f\v");
  return s.substr(b, e - b + 1);
}

// Provider APIs take the bare model name, without the developer prefix.
std::string BareModelName(const std::string& model_id) {
  std::size_t slash = model_id.find('/');
  return slash == std::string::npos ? model_id : model_id.substr(slash + 1);
}

class SlotGuard {
 public:
  SlotGuard(std::mutex& m, std::condition_variable& cv, int& in_use, int limit)
      : m_(m), cv_(cv), in_use_(in_use) {
    std::unique_lock<std::mutex> lock(m_);
    cv_.wait(lock, [&] { return in_use_ < limit; });
    ++in_use_;
  }
  ~SlotGuard() {
    {
      std::lock_guard<std::mutex> lock(m_);
      --in_use_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex& m_;
  std::condition_variable& cv_;
  int& in_use_;
};

}  // namespace

Gateway::Gateway(GatewayConfig config) : config_(std::move(config)) {
  if (!config_.cache_dir.empty()) {
    std::filesystem::create_directories(config_.cache_dir);
  }
}

std::string Gateway::CacheKey(const ModelEndpoint& endpoint,
                              const std::string& prompt) {
  char params[96];
  std::snprintf(params, sizeof params, "|t=%.6f|n=%d|", endpoint.temperature,
                endpoint.max_output_tokens);
  return util::Sha256Hex(endpoint.model_id + params + prompt);
}

Completion Gateway::DoRequest(const ModelEndpoint& endpoint,
                              const std::string& prompt) {
  std::string secret;
  if (!endpoint.auth_env.empty()) {
    const char* env = std::getenv(endpoint.auth_env.c_str());
    if (env == nullptr) {
      throw AuthError("secret environment variable not set: " +
                      endpoint.auth_env);
    }
    secret = env;
  }

  json body = {
      {"model", BareModelName(endpoint.model_id)},
      {"messages", json::array({{{"role", "user"}, {"content", prompt}}})},
      {"temperature", endpoint.temperature},
      {"max_tokens", endpoint.max_output_tokens},
  };
  const std::string payload = body.dump();

  int backoff_ms = config_.backoff_initial_ms;
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt <= config_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    SlotGuard slot(slot_mutex_, slot_cv_, slots_in_use_, config_.max_in_flight);
    httplib::Client client(endpoint.base_url);
    client.set_connection_timeout(static_cast<int>(endpoint.timeout_s), 0);
    client.set_read_timeout(static_cast<int>(endpoint.timeout_s), 0);
    httplib::Headers headers;
    if (!secret.empty()) headers.emplace("Authorization", "Bearer " + secret);

    auto start = std::chrono::steady_clock::now();
    ++requests_;
    httplib::Result res =
        client.Post(endpoint.path, headers, payload, "application/json");
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    if (!res) {
      last_error = "transport failure: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status == 401 || res->status == 403) {
      throw AuthError("authentication rejected by " + endpoint.base_url +
                      " (HTTP " + std::to_string(res->status) + ")");
    }
    if (res->status == 429) {
      last_error = "rate limited (HTTP 429)";
      if (res->has_header("Retry-After")) {
        int delay_s = std::atoi(res->get_header_value("Retry-After").c_str());
        if (delay_s > 0) {
          std::this_thread::sleep_for(std::chrono::seconds(delay_s));
        }
      }
      continue;
    }
    if (res->status >= 500) {
      last_error = "server error (HTTP " + std::to_string(res->status) + ")";
      continue;
    }
    if (res->status != 200) {
      throw GatewayError("request failed (HTTP " + std::to_string(res->status) +
                         "): " + res->body);
    }
    json reply = json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.contains("choices") ||
        reply["choices"].empty()) {
      throw GatewayError("malformed completion response: " + res->body);
    }
    Completion completion;
    completion.text =
        Trim(reply["choices"][0]["message"]["content"].get<std::string>());
    completion.latency_ms = elapsed;
    return completion;
  }
  throw GatewayError("request to " + endpoint.base_url + " failed after " +
                     std::to_string(config_.max_retries + 1) +
                     " attempts: " + last_error);
}

Completion Gateway::Complete(const ModelEndpoint& endpoint,
                             const std::string& prompt) {
  if (config_.replay_only) {
    throw ReplayMissError("network disabled in replay mode (model " +
                          endpoint.model_id + ")");
  }
  return DoRequest(endpoint, prompt);
}

Completion Gateway::CachedComplete(const ModelEndpoint& endpoint,
                                   const std::string& prompt) {
  if (config_.cache_dir.empty()) return Complete(endpoint, prompt);
  const std::string key = CacheKey(endpoint, prompt);
  const std::string path = config_.cache_dir + "/" + key + ".json";

  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (std::filesystem::exists(path)) {
      json entry = json::parse(util::ReadFile(path), nullptr, false);
      if (!entry.is_discarded() && entry.contains("reply")) {
        Completion completion;
        completion.text = entry["reply"].get<std::string>();
        completion.latency_ms = entry.value("latency_ms", 0.0);
        return completion;
      }
      std::fprintf(stderr, "warning: corrupt cache entry %s, refetching\n",
                   path.c_str());
    }
  }

  if (config_.replay_only) {
    throw ReplayMissError("replay cache miss for model " + endpoint.model_id +
                          " (key " + key + ")");
  }
  Completion completion = DoRequest(endpoint, prompt);
  json entry = {
      {"model_id", endpoint.model_id},
      {"temperature", endpoint.temperature},
      {"max_output_tokens", endpoint.max_output_tokens},
      {"prompt", prompt},
      {"reply", completion.text},
      {"latency_ms", completion.latency_ms},
  };
  std::lock_guard<std::mutex> lock(cache_mutex_);
  util::WriteFile(path, entry.dump(2) + "\n");
  return completion;
}

}  // namespace rodiac::gateway
