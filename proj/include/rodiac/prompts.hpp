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

#ifndef RODIAC_PROMPTS_HPP_
#define RODIAC_PROMPTS_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace rodiac::prompts {

struct PromptTemplate {
  std::string id;
  std::string body;  // contains the "{input}" placeholder exactly once
  int shots = 0;     // number of in-prompt worked examples
};

// The five builtin templates, zero-shot through three-shot. Bodies are the
// canonical texts; the same texts ship as golden files under templates/.
const std::vector<PromptTemplate>& BuiltinTemplates();
const PromptTemplate& BuiltinTemplate(const std::string& id);

// Substitutes the single "{input}" placeholder. Throws std::invalid_argument
// when the body carries no placeholder.
std::string Render(const PromptTemplate& tpl, std::string_view input);

// Loads a template file: optional "---" front-matter block with "id:" and
// "shots:" lines, body afterwards. Without front matter the id is the file
// stem and shots are counted from the example headings.
PromptTemplate LoadTemplateFile(const std::string& path);

// Throws std::invalid_argument if the placeholder is missing/duplicated or
// the shot count disagrees with the example headings in the body.
void Validate(const PromptTemplate& tpl);

// Number of "# Example"/"## Example" headings in a body.
int CountExampleBlocks(std::string_view body);

// SHA-256 of a builtin body, for golden-file checks.
std::string BuiltinBodyDigest(const std::string& id);

}  // namespace rodiac::prompts

#endif  // RODIAC_PROMPTS_HPP_
