// Copyright 2026 The wbrl Authors.
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

#ifndef WBRL_TEXT_HPP_
#define WBRL_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace wbrl {

// Shortest round-trip decimal form. Infinities serialize as "inf"/"-inf";
// all report writers go through this so outputs are byte-stable.
std::string format_double(double value);

// Inverse of format_double; accepts "inf", "-inf", "nan".
double parse_double(std::string_view text);

std::vector<std::string> split(std::string_view text, char sep);

std::string trim(std::string_view text);

// Case-insensitive ASCII comparison, used by CLI-style tag parsing.
bool iequals(std::string_view a, std::string_view b);

}  // namespace wbrl

#endif  // WBRL_TEXT_HPP_
