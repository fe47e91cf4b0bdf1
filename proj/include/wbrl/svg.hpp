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

#ifndef WBRL_SVG_HPP_
#define WBRL_SVG_HPP_

#include <string>
#include <vector>

namespace wbrl {

// Minimal deterministic SVG emitters; no external plotting toolchain.
// Non-finite y values are skipped and annotated, which is how infinite
// divergences show up in the metric grid.

struct SvgSeries {
  std::string title;
  std::vector<double> xs;
  std::vector<double> ys;
};

// Grid of small line charts, `columns` cells per row.
std::string svg_chart_grid(const std::string& title, const std::vector<SvgSeries>& cells,
                           int columns);

// Bar chart over integer labels `first_label .. first_label + counts - 1`.
std::string svg_bar_chart(const std::string& title, int first_label,
                          const std::vector<int>& counts);

// Square heatmap of nonnegative counts (row-major), darker = larger.
std::string svg_heatmap(const std::string& title, int size, const std::vector<int>& counts);

}  // namespace wbrl

#endif  // WBRL_SVG_HPP_
