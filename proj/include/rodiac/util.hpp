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

#ifndef RODIAC_UTIL_HPP_
#define RODIAC_UTIL_HPP_

#include <span>
#include <string>
#include <string_view>

namespace rodiac::util {

inline constexpr const char* kVersion = "0.1.0";

// SHA-256 hex digest.
std::string Sha256Hex(std::string_view data);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

// Sum of a sorted copy; permutation-invariant by construction.
double StableMean(std::span<const double> values);

// Filesystem-safe name: '/', ':' and whitespace become '_'.
std::string SafeName(std::string_view s);

}  // namespace rodiac::util

#endif  // RODIAC_UTIL_HPP_
