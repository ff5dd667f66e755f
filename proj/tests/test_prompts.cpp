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
#include <stdexcept>
#include <string>

#include "rodiac/prompts.hpp"
#include "rodiac/util.hpp"

using namespace rodiac;

namespace {

const char* kTemplateIds[] = {
    "restore_diacritics",
    "restore_diacritics_verbose",
    "restore_diacritics_verbose_1s",
    "restore_diacritics_verbose_2s",
    "restore_diacritics_verbose_3s",
};

std::string GoldenPath(const std::string& id) {
  return std::string(RODIAC_SOURCE_DIR) + "/templates/" + id + ".md";
}

}  // namespace

TEST_CASE("builtin bodies byte-match the golden files") {
  for (const char* id : kTemplateIds) {
    const prompts::PromptTemplate& tpl = prompts::BuiltinTemplate(id);
    std::string golden = util::ReadFile(GoldenPath(id));
    CHECK_MESSAGE(tpl.body == golden, "template body drifted: ", id);
    CHECK(prompts::BuiltinBodyDigest(id) == util::Sha256Hex(golden));
  }
}

TEST_CASE("builtins carry the expected ids and shot counts") {
  const auto& all = prompts::BuiltinTemplates();
  REQUIRE(all.size() == 5);
  CHECK(all[0].id == "restore_diacritics");
  CHECK(all[0].shots == 0);
  CHECK(all[0].body == "Restore the diacritics: {input}");
  CHECK(all[1].shots == 0);
  CHECK(all[1].body.find("Respond strictly with the restored text") !=
        std::string::npos);
  CHECK(all[2].shots == 1);
  CHECK(all[3].shots == 2);
  CHECK(all[4].shots == 3);
  CHECK(all[4].body.find("De mîine se anunță ploi.") != std::string::npos);
}

TEST_CASE("render substitutes the single placeholder") {
  const auto& zero = prompts::BuiltinTemplate("restore_diacritics");
  CHECK(prompts::Render(zero, "Si inca o data") ==
        "Restore the diacritics: Si inca o data");

  const auto& verbose = prompts::BuiltinTemplate("restore_diacritics_verbose");
  std::string rendered = prompts::Render(verbose, "x");
  CHECK(rendered.find("INPUT: x") != std::string::npos);
  CHECK(rendered.substr(rendered.size() - 7) == "OUTPUT:");
  CHECK(rendered.find("{input}") == std::string::npos);
}

TEST_CASE("render round trip restores the golden body") {
  for (const char* id : kTemplateIds) {
    const auto& tpl = prompts::BuiltinTemplate(id);
    std::string marker = "@@MARK@@";
    std::string rendered = prompts::Render(tpl, marker);
    std::size_t pos = rendered.find(marker);
    REQUIRE(pos != std::string::npos);
    std::string restored = rendered.substr(0, pos) + "{input}" +
                           rendered.substr(pos + marker.size());
    CHECK(restored == tpl.body);
  }
}

TEST_CASE("render without a placeholder is a contract violation") {
  prompts::PromptTemplate broken{"broken", "no placeholder here", 0};
  CHECK_THROWS_AS(prompts::Render(broken, "x"), std::invalid_argument);
}

TEST_CASE("validate rejects bad templates") {
  CHECK_THROWS_AS(prompts::Validate({"t", "nothing", 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(prompts::Validate({"t", "{input} {input}", 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      prompts::Validate({"t", "## Example 1\n{input}", 0}),  // shots mismatch
      std::invalid_argument);
}

TEST_CASE("shots ordering: higher-shot templates contain the lower examples") {
  const auto& s1 = prompts::BuiltinTemplate("restore_diacritics_verbose_1s");
  const auto& s2 = prompts::BuiltinTemplate("restore_diacritics_verbose_2s");
  const auto& s3 = prompts::BuiltinTemplate("restore_diacritics_verbose_3s");
  std::string ex1 =
      "INPUT: Maine va fi o zi frumoasa.\nOUTPUT: Mâine va fi o zi frumoasă.";
  CHECK(s1.body.find(ex1) != std::string::npos);
  CHECK(s2.body.find(ex1) != std::string::npos);
  CHECK(s3.body.find(ex1) != std::string::npos);
  std::size_t ex2 = s2.body.find("## Example 2");
  REQUIRE(ex2 != std::string::npos);
  std::string ex2_block = s2.body.substr(ex2, s2.body.find("\n\n", ex2) - ex2);
  CHECK(s3.body.find(ex2_block) != std::string::npos);
}

TEST_CASE("template files load with front matter") {
  std::string path =
      (std::filesystem::temp_directory_path() / "rodiac_tpl.md").string();
  util::WriteFile(path,
                  "---\nid: custom\nshots: 1\n---\n"
                  "# Example\nINPUT: a\nOUTPUT: ă\n\nINPUT: {input}\nOUTPUT:");
  auto tpl = prompts::LoadTemplateFile(path);
  CHECK(tpl.id == "custom");
  CHECK(tpl.shots == 1);
  CHECK(tpl.body.rfind("# Example", 0) == 0);
}

TEST_CASE("template files load without front matter, tolerating one newline") {
  std::string path =
      (std::filesystem::temp_directory_path() / "rodiac_plain.md").string();
  util::WriteFile(path, "Say it back: {input}\n");
  auto tpl = prompts::LoadTemplateFile(path);
  CHECK(tpl.id == "rodiac_plain");
  CHECK(tpl.shots == 0);
  CHECK(tpl.body == "Say it back: {input}");
}

TEST_CASE("golden files reload as the builtin templates") {
  for (const char* id : kTemplateIds) {
    auto tpl = prompts::LoadTemplateFile(GoldenPath(id));
    CHECK(tpl.id == id);
    CHECK(tpl.body == prompts::BuiltinTemplate(id).body);
    CHECK(tpl.shots == prompts::BuiltinTemplate(id).shots);
  }
}
