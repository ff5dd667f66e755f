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

#include "rodiac/prompts.hpp"

#include <filesystem>
#include <sstream>
#include <stdexcept>

#include "rodiac/util.hpp"

namespace rodiac::prompts {

namespace {

constexpr std::string_view kPlaceholder = "{input}";

const char* kZeroShot = "Restore the diacritics: {input}";

const char* kVerbose =
    "# Instruction\n"
    "\n"
    "Restore the diacritics for the following INPUT. Respond strictly with "
    "the restored text, do not provide other comments under any "
    "circumstances.\n"
    "\n"
    "INPUT: {input}\n"
    "OUTPUT:";

const char* kVerbose1s =
    "# Instruction\n"
    "Restore the diacritics for the following INPUT. Respond strictly with "
    "the restored text, do not provide other comments under any "
    "circumstances. Follow the Example provided below.\n"
    "\n"
    "# Example\n"
    "INPUT: Maine va fi o zi frumoasa.\n"
    "OUTPUT: Mâine va fi o zi frumoasă.\n"
    "\n"
    "# Inference\n"
    "INPUT: {input}\n"
    "OUTPUT:";

const char* kVerbose2s =
    "# Instruction\n"
    "Restore the diacritics for the following INPUT. Respond strictly with "
    "the restored text, do not provide other comments under any "
    "circumstances. Follow the Examples provided below.\n"
    "\n"
    "# Examples\n"
    "## Example 1\n"
    "INPUT: Maine va fi o zi frumoasa.\n"
    "OUTPUT: Mâine va fi o zi frumoasă.\n"
    "\n"
    "## Example 2\n"
    "INPUT: De cand si-a luat masina, Calin prefera sa conduca in loc sa "
    "mearga pe jos. Viata sa e mai simpla acum, desi mai scumpa.\n"
    "OUTPUT: De când și-a luat mașină, Călin preferă să conducă în loc să "
    "meargă pe jos. Viața sa e mai simplă acum, deși mai scumpă.\n"
    "\n"
    "# Inference\n"
    "INPUT: {input}\n"
    "OUTPUT:";

const char* kVerbose3s =
    "# Instruction\n"
    "Restore the diacritics for the following INPUT. Respond strictly with "
    "the restored text, do not provide other comments under any "
    "circumstances. Follow the Examples provided below.\n"
    "\n"
    "# Examples\n"
    "## Example 1\n"
    "INPUT: Maine va fi o zi frumoasa.\n"
    "OUTPUT: Mâine va fi o zi frumoasă.\n"
    "\n"
    "## Example 2\n"
    "INPUT: De cand si-a luat masina, Calin prefera sa conduca in loc sa "
    "mearga pe jos. Viata sa e mai simpla acum, desi mai scumpa.\n"
    "OUTPUT: De când și-a luat mașină, Călin preferă să conducă în loc să "
    "meargă pe jos. Viața sa e mai simplă acum, deși mai scumpă.\n"
    "\n"
    "## Example 3\n"
    "INPUT:De miine se anunta ploi. Ciinele nu mai inceteaza din latrat. "
    "Cind am vazut mincarea, mi s-a facut scirba.\n"
    "OUTPUT:De mîine se anunță ploi. Cîinele nu mai încetează din lătrat. "
    "Cînd am văzut mîncarea, mi s-a făcut scîrbă.\n"
    "\n"
    "# Inference\n"
    "INPUT: {input}\n"
    "OUTPUT:";

std::vector<PromptTemplate> MakeBuiltins() {
  std::vector<PromptTemplate> out = {
      {"restore_diacritics", kZeroShot, 0},
      {"restore_diacritics_verbose", kVerbose, 0},
      {"restore_diacritics_verbose_1s", kVerbose1s, 1},
      {"restore_diacritics_verbose_2s", kVerbose2s, 2},
      {"restore_diacritics_verbose_3s", kVerbose3s, 3},
  };
  for (const PromptTemplate& t : out) Validate(t);
  return out;
}

std::size_t CountOccurrences(std::string_view haystack,
                             std::string_view needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = haystack.find(needle, pos)) != std::string_view::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

int CountExampleBlocks(std::string_view body) {
  int count = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t end = body.find('\n', pos);
    std::string_view line = body.substr(
        pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (line.rfind("## Example", 0) == 0 || line == "# Example") ++count;
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return count;
}

void Validate(const PromptTemplate& tpl) {
  std::size_t n = CountOccurrences(tpl.body, kPlaceholder);
  if (n != 1) {
    throw std::invalid_argument("template '" + tpl.id + "' has " +
                                std::to_string(n) +
                                " {input} placeholders, expected exactly 1");
  }
  if (CountExampleBlocks(tpl.body) != tpl.shots) {
    throw std::invalid_argument(
        "template '" + tpl.id + "' declares " + std::to_string(tpl.shots) +
        " shots but body has " + std::to_string(CountExampleBlocks(tpl.body)) +
        " example blocks");
  }
}

const std::vector<PromptTemplate>& BuiltinTemplates() {
  static const std::vector<PromptTemplate> builtins = MakeBuiltins();
  return builtins;
}

const PromptTemplate& BuiltinTemplate(const std::string& id) {
  for (const PromptTemplate& t : BuiltinTemplates()) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown builtin template: " + id);
}

std::string Render(const PromptTemplate& tpl, std::string_view input) {
  std::size_t pos = tpl.body.find(kPlaceholder);
  if (pos == std::string::npos) {
    throw std::invalid_argument("template '" + tpl.id +
                                "' has no {input} placeholder");
  }
  std::string out = tpl.body;
  out.replace(pos, kPlaceholder.size(), input);
  return out;
}

PromptTemplate LoadTemplateFile(const std::string& path) {
  std::string content = util::ReadFile(path);
  PromptTemplate tpl;
  tpl.id = std::filesystem::path(path).stem().string();
  if (content.rfind("---\n", 0) == 0) {
    std::size_t end = content.find("\n---\n", 4);
    if (end == std::string::npos) {
      throw std::invalid_argument("unterminated front matter in " + path);
    }
    std::istringstream fm(content.substr(4, end - 4));
    std::string line;
    bool shots_given = false;
    while (std::getline(fm, line)) {
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string key = line.substr(0, colon);
      std::string value = line.substr(colon + 1);
      value.erase(0, value.find_first_not_of(" \t"));
      if (key == "id") {
        tpl.id = value;
      } else if (key == "shots") {
        tpl.shots = std::stoi(value);
        shots_given = true;
      }
    }
    tpl.body = content.substr(end + 5);
    if (!shots_given) tpl.shots = CountExampleBlocks(tpl.body);
  } else {
    tpl.body = content;
    tpl.shots = CountExampleBlocks(tpl.body);
  }
  // golden files carry no trailing newline; tolerate one from editors
  if (!tpl.body.empty() && tpl.body.back() == '\n') tpl.body.pop_back();
  Validate(tpl);
  return tpl;
}

std::string BuiltinBodyDigest(const std::string& id) {
  return util::Sha256Hex(BuiltinTemplate(id).body);
}

}  // namespace rodiac::prompts
