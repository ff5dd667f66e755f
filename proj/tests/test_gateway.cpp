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

#include <doctest.h>

#include <atomic>
#include <filesystem>
#include <functional>
#include <string>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "rodiac/gateway.hpp"
#include "rodiac/util.hpp"

using namespace rodiac;
using json = nlohmann::json;

namespace {

// In-process chat-completion endpoint with a programmable reply function.
class MockServer {
 public:
  using ReplyFn = std::function<std::string(const std::string& prompt)>;

  explicit MockServer(ReplyFn reply) : reply_(std::move(reply)) {
    server_.Post("/v1/chat/completions",
                 [this](const httplib::Request& req, httplib::Response& res) {
                   ++hits_;
                   if (fail_next_ > 0) {
                     --fail_next_;
                     res.status = 500;
                     return;
                   }
                   json body = json::parse(req.body);
                   std::string prompt =
                       body.at("messages").at(0).at("content")
                           .get<std::string>();
                   json out = {{"choices",
                                json::array({{{"message",
                                               {{"role", "assistant"},
                                                {"content", reply_(prompt)}}}}})}};
                   res.set_content(out.dump(), "application/json");
                 });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~MockServer() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  int hits() const { return hits_; }
  void FailNext(int n) { fail_next_ = n; }

 private:
  httplib::Server server_;
  ReplyFn reply_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> hits_{0};
  std::atomic<int> fail_next_{0};
};

std::string TempDir(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(path);
  std::filesystem::create_directories(path);
  return path.string();
}

gateway::ModelEndpoint Endpoint(const MockServer& server) {
  gateway::ModelEndpoint ep;
  ep.model_id = "mock/echo-1";
  ep.base_url = server.url();
  ep.timeout_s = 5;
  return ep;
}

}  // namespace

TEST_CASE("cache key is stable and parameter-sensitive") {
  gateway::ModelEndpoint ep;
  ep.model_id = "mock/m";
  std::string base = gateway::Gateway::CacheKey(ep, "hello");
  CHECK(base == gateway::Gateway::CacheKey(ep, "hello"));
  CHECK(base != gateway::Gateway::CacheKey(ep, "hello!"));
  gateway::ModelEndpoint warm = ep;
  warm.temperature = 0.7;
  CHECK(base != gateway::Gateway::CacheKey(warm, "hello"));
  gateway::ModelEndpoint longer = ep;
  longer.max_output_tokens = 2048;
  CHECK(base != gateway::Gateway::CacheKey(longer, "hello"));
  gateway::ModelEndpoint other = ep;
  other.model_id = "mock/m2";
  CHECK(base != gateway::Gateway::CacheKey(other, "hello"));
}

TEST_CASE("complete returns the mock reply trimmed") {
  MockServer server([](const std::string& p) { return "  reply to: " + p + "\n"; });
  gateway::Gateway gw({TempDir("rodiac_gw1")});
  auto completion = gw.Complete(Endpoint(server), "ping");
  CHECK(completion.text == "reply to: ping");
  CHECK(completion.latency_ms >= 0);
  CHECK(server.hits() == 1);
}

TEST_CASE("cached_complete issues one request for identical calls") {
  MockServer server([](const std::string& p) { return p; });
  gateway::Gateway gw({TempDir("rodiac_gw2")});
  auto ep = Endpoint(server);
  auto first = gw.CachedComplete(ep, "aceeasi intrebare");
  auto second = gw.CachedComplete(ep, "aceeasi intrebare");
  CHECK(first.text == second.text);
  CHECK(first.latency_ms == second.latency_ms);  // served from cache
  CHECK(gw.request_count() == 1);
  CHECK(server.hits() == 1);

  // changed temperature is a different key
  auto warm = ep;
  warm.temperature = 0.5;
  gw.CachedComplete(warm, "aceeasi intrebare");
  CHECK(server.hits() == 2);
}

TEST_CASE("corrupt cache entries are rewritten") {
  MockServer server([](const std::string&) { return "ok"; });
  std::string dir = TempDir("rodiac_gw3");
  gateway::Gateway gw({dir});
  auto ep = Endpoint(server);
  gw.CachedComplete(ep, "q");
  std::string key = gateway::Gateway::CacheKey(ep, "q");
  util::WriteFile(dir + "/" + key + ".json", "{not json");
  auto redo = gw.CachedComplete(ep, "q");
  CHECK(redo.text == "ok");
  CHECK(server.hits() == 2);  // refetched
  // and the entry is valid again
  CHECK(json::parse(util::ReadFile(dir + "/" + key + ".json"))
            .at("reply")
            .get<std::string>() == "ok");
}

TEST_CASE("transient server errors are retried") {
  MockServer server([](const std::string&) { return "recovered"; });
  server.FailNext(2);
  gateway::GatewayConfig cfg{TempDir("rodiac_gw4")};
  cfg.backoff_initial_ms = 1;
  gateway::Gateway gw(cfg);
  auto completion = gw.CachedComplete(Endpoint(server), "x");
  CHECK(completion.text == "recovered");
  CHECK(server.hits() == 3);
}

TEST_CASE("persistent failure surfaces after the retry budget") {
  MockServer server([](const std::string&) { return "never"; });
  server.FailNext(1000);
  gateway::GatewayConfig cfg{TempDir("rodiac_gw5")};
  cfg.max_retries = 2;
  cfg.backoff_initial_ms = 1;
  gateway::Gateway gw(cfg);
  CHECK_THROWS_AS(gw.Complete(Endpoint(server), "x"), gateway::GatewayError);
  CHECK(server.hits() == 3);  // initial try + 2 retries
}

TEST_CASE("missing secret env var is an immediate auth error") {
  MockServer server([](const std::string&) { return "no"; });
  auto ep = Endpoint(server);
  ep.auth_env = "RODIAC_TEST_SECRET_THAT_DOES_NOT_EXIST";
  gateway::Gateway gw({TempDir("rodiac_gw6")});
  CHECK_THROWS_AS(gw.Complete(ep, "x"), gateway::AuthError);
  CHECK(server.hits() == 0);  // failed before any network call
}

TEST_CASE("auth rejection is fatal without retries") {
  httplib::Server server;
  server.Post("/v1/chat/completions",
              [](const httplib::Request&, httplib::Response& res) {
                res.status = 401;
              });
  int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  gateway::ModelEndpoint ep;
  ep.model_id = "mock/m";
  ep.base_url = "http://127.0.0.1:" + std::to_string(port);
  gateway::Gateway gw({TempDir("rodiac_gw7")});
  CHECK_THROWS_AS(gw.Complete(ep, "x"), gateway::AuthError);
  server.stop();
  t.join();
}

TEST_CASE("replay mode never touches the network") {
  MockServer server([](const std::string& p) { return "gold:" + p; });
  std::string dir = TempDir("rodiac_gw8");
  auto ep = Endpoint(server);
  {
    gateway::Gateway warm({dir});
    warm.CachedComplete(ep, "cached question");
  }
  gateway::GatewayConfig replay{dir};
  replay.replay_only = true;
  gateway::Gateway gw(replay);
  // hit: served from disk
  CHECK(gw.CachedComplete(ep, "cached question").text ==
        "gold:cached question");
  // miss: hard error instead of a request
  int hits_before = server.hits();
  CHECK_THROWS_AS(gw.CachedComplete(ep, "unseen question"),
                  gateway::ReplayMissError);
  CHECK(server.hits() == hits_before);
}
