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

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>

#include "rodiac/corpus.hpp"
#include "rodiac/textnorm.hpp"
#include "rodiac/util.hpp"

using namespace rodiac;

namespace {

std::string TempCorpus(const std::string& name, const std::string& content) {
  std::string path =
      (std::filesystem::temp_directory_path() / name).string();
  util::WriteFile(path, content);
  return path;
}

}  // namespace

TEST_CASE("load corpus skips blank lines and assigns ordinal ids") {
  std::string path =
      TempCorpus("rodiac_load.txt", "Mâine plouă.\n\nAzi e cald.\n");
  auto c = corpus::LoadCorpus(path, "tag");
  REQUIRE(c.size() == 2);
  CHECK(c[0].id == "tag-0");
  CHECK(c[0].text == "Mâine plouă.");
  CHECK(c[0].dataset == "tag");
  CHECK(c[1].id == "tag-1");
  CHECK(c[1].text == "Azi e cald.");
}

TEST_CASE("load corpus normalizes legacy cedilla lines") {
  std::string path = TempCorpus("rodiac_ced.txt", "paşte ţara\n");
  auto c = corpus::LoadCorpus(path, "t");
  REQUIRE(c.size() == 1);
  CHECK(c[0].text == "paște țara");
}

TEST_CASE("load corpus trims CR and surrounding whitespace") {
  std::string path = TempCorpus("rodiac_crlf.txt", "  una  \r\n\tdoi\r\n");
  auto c = corpus::LoadCorpus(path, "t");
  REQUIRE(c.size() == 2);
  CHECK(c[0].text == "una");
  CHECK(c[1].text == "doi");
}

TEST_CASE("load corpus errors") {
  CHECK_THROWS_AS(corpus::LoadCorpus("/nonexistent/corpus.txt", "t"),
                  std::runtime_error);
  // a malformed line is reported with its 1-based line number
  std::string path = TempCorpus("rodiac_bad.txt", "buna\nrau\xFFrau\n");
  try {
    corpus::LoadCorpus(path, "t");
    FAIL("expected a decode failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(":2:") != std::string::npos);
  }
}

TEST_CASE("empty file loads as empty corpus") {
  std::string path = TempCorpus("rodiac_empty.txt", "");
  CHECK(corpus::LoadCorpus(path, "t").empty());
}

TEST_CASE("sample: full, zero, deterministic, order-preserving") {
  std::vector<corpus::Statement> c;
  for (int i = 0; i < 50; ++i) {
    c.push_back({"t-" + std::to_string(i), "text " + std::to_string(i), "t"});
  }
  CHECK(corpus::Sample(c, 0, 9).empty());

  auto all = corpus::Sample(c, c.size(), 123);
  REQUIRE(all.size() == c.size());
  for (std::size_t i = 0; i < c.size(); ++i) CHECK(all[i].id == c[i].id);

  auto a = corpus::Sample(c, 20, 42);
  auto b = corpus::Sample(c, 20, 42);
  REQUIRE(a.size() == 20);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].id == b[i].id);

  // original relative order preserved
  std::size_t last = 0;
  for (const auto& st : a) {
    std::size_t ord = std::stoul(st.id.substr(2));
    if (&st != &a.front()) CHECK(ord > last);
    last = ord;
  }

  auto other = corpus::Sample(c, 20, 43);
  std::set<std::string> ids_a, ids_other;
  for (const auto& s : a) ids_a.insert(s.id);
  for (const auto& s : other) ids_other.insert(s.id);
  CHECK(ids_a != ids_other);  // different seed, different subset (w.h.p.)

  CHECK_THROWS_AS(corpus::Sample(c, c.size() + 1, 1), std::out_of_range);
}

TEST_CASE("compute stats on the hand-counted fixture") {
  std::vector<corpus::Statement> c = {
      {"t-0", "Țară și țară.", "t"},
      {"t-1", "Azi.", "t"},
  };
  auto s = corpus::ComputeStats(c);
  CHECK(s.total_statements == 2);
  CHECK(s.total_words == 4);
  CHECK(s.distinct_words == 3);  // țară, și, azi
  CHECK(s.words_with_diacritics == 2);
  CHECK(s.total_diacritic_chars == 5);  // Ț ă ș ț ă
  CHECK(s.avg_words_per_statement == doctest::Approx(2.0));
  CHECK(s.avg_diacritics_per_statement == doctest::Approx(2.5));
  CHECK(s.avg_diacritics_per_word == doctest::Approx(1.25));
}

TEST_CASE("empty corpus yields all-zero stats") {
  auto s = corpus::ComputeStats({});
  CHECK(s.total_statements == 0);
  CHECK(s.total_words == 0);
  CHECK(s.avg_words_per_statement == 0.0);
  CHECK(s.avg_diacritics_per_word == 0.0);
}

TEST_CASE("strip corpus preserves ids, order and code-point length") {
  std::vector<corpus::Statement> c = {
      {"x-0", "Mâine va fi o zi frumoasă.", "x"},
      {"x-1", "abc 123", "x"},
  };
  auto stripped = corpus::StripCorpus(c);
  REQUIRE(stripped.size() == 2);
  CHECK(stripped[0].first == "x-0");
  CHECK(stripped[0].second == "Maine va fi o zi frumoasa.");
  CHECK(stripped[1].second == "abc 123");
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(textnorm::DecodeUtf8(stripped[i].second).size() ==
          textnorm::DecodeUtf8(c[i].text).size());
  }
  // stats over the stripped text report zero diacritics
  std::vector<corpus::Statement> sc;
  for (const auto& [id, text] : stripped) sc.push_back({id, text, "x"});
  CHECK(corpus::ComputeStats(sc).total_diacritic_chars == 0);
}

TEST_CASE("stats invariants on the fixture file") {
  std::string path = TempCorpus(
      "rodiac_inv.txt", "Mâine plouă în sat.\nȘi azi.\nfara diacritice\n");
  auto c = corpus::LoadCorpus(path, "f");
  auto s = corpus::ComputeStats(c);
  CHECK(s.words_with_diacritics <= s.distinct_words);
  CHECK(s.total_diacritic_chars >= 2);  // >= #statements with a diacritic
}

TEST_CASE("stats csv lists all fields") {
  auto csv = corpus::StatsCsv(corpus::ComputeStats({}));
  for (const char* key :
       {"total_statements", "total_words", "distinct_words",
        "words_with_diacritics", "total_diacritic_chars",
        "avg_words_per_statement", "avg_diacritics_per_statement",
        "avg_diacritics_per_word"}) {
    CHECK(csv.find(key) != std::string::npos);
  }
}

TEST_CASE("normalized word") {
  CHECK(corpus::NormalizedWord("Țară,") == "țară");
  CHECK(corpus::NormalizedWord("(azi)") == "azi");
  CHECK(corpus::NormalizedWord("...") == "");
}
