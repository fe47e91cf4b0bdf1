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

#include "wbrl/svg.hpp"

#include <algorithm>
#include <cmath>

#include "wbrl/text.hpp"

namespace wbrl {

namespace {

constexpr int kCellWidth = 260;
constexpr int kCellHeight = 180;
constexpr int kPad = 36;

std::string num(double v) {
  // Two decimals are plenty for pixel coordinates and keep files small.
  double r = std::round(v * 100.0) / 100.0;
  if (r == 0.0) r = 0.0;  // avoid -0
  return format_double(r);
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string open_svg(int width, int height) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\" font-family=\"sans-serif\">\n";
}

std::string text_at(double x, double y, const std::string& body, int size, const char* anchor) {
  return "<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" font-size=\"" + std::to_string(size) +
         "\" text-anchor=\"" + anchor + "\">" + escape(body) + "</text>\n";
}

}  // namespace

std::string svg_chart_grid(const std::string& title, const std::vector<SvgSeries>& cells,
                           int columns) {
  if (columns < 1) columns = 1;
  const int rows = (static_cast<int>(cells.size()) + columns - 1) / columns;
  const int width = columns * kCellWidth + 2 * kPad;
  const int height = rows * kCellHeight + 2 * kPad + 20;

  std::string out = open_svg(width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += text_at(width / 2.0, kPad - 12, title, 15, "middle");

  for (std::size_t c = 0; c < cells.size(); ++c) {
    const SvgSeries& cell = cells[c];
    const double x0 = kPad + static_cast<int>(c) % columns * kCellWidth + 30;
    const double y0 = kPad + 16 + static_cast<int>(c) / columns * kCellHeight;
    const double plot_w = kCellWidth - 48;
    const double plot_h = kCellHeight - 52;

    double xmin = 0.0, xmax = 1.0, ymax = 1.0;
    bool any = false;
    int skipped = 0;
    for (std::size_t k = 0; k < cell.xs.size(); ++k) {
      if (!std::isfinite(cell.ys[k])) {
        ++skipped;
        continue;
      }
      if (!any) {
        xmin = xmax = cell.xs[k];
        ymax = cell.ys[k];
        any = true;
      } else {
        xmin = std::min(xmin, cell.xs[k]);
        xmax = std::max(xmax, cell.xs[k]);
        ymax = std::max(ymax, cell.ys[k]);
      }
    }
    if (xmax <= xmin) xmax = xmin + 1.0;
    if (ymax <= 0.0) ymax = 1.0;

    out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#888\"/>\n";
    out += text_at(x0 + plot_w / 2, y0 - 5, cell.title, 11, "middle");
    out += text_at(x0 - 4, y0 + 10, num(ymax), 9, "end");
    out += text_at(x0 - 4, y0 + plot_h, "0", 9, "end");
    out += text_at(x0, y0 + plot_h + 12, num(xmin), 9, "middle");
    out += text_at(x0 + plot_w, y0 + plot_h + 12, num(xmax), 9, "middle");

    std::string points;
    for (std::size_t k = 0; k < cell.xs.size(); ++k) {
      if (!std::isfinite(cell.ys[k])) continue;
      double px = x0 + (cell.xs[k] - xmin) / (xmax - xmin) * plot_w;
      double py = y0 + plot_h - std::max(0.0, cell.ys[k]) / ymax * plot_h;
      if (!points.empty()) points += ' ';
      points += num(px) + "," + num(py);
    }
    if (!points.empty()) {
      out += "<polyline points=\"" + points +
             "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
    }
    if (skipped > 0) {
      out += text_at(x0 + plot_w / 2, y0 + plot_h / 2, std::to_string(skipped) + " inf", 10,
                     "middle");
    }
  }
  out += "</svg>\n";
  return out;
}

std::string svg_bar_chart(const std::string& title, int first_label,
                          const std::vector<int>& counts) {
  const int width = 640;
  const int height = 360;
  const double x0 = 50, y0 = 50;
  const double plot_w = width - 80, plot_h = height - 110;

  int peak = 1;
  for (int c : counts) peak = std::max(peak, c);

  std::string out = open_svg(width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += text_at(width / 2.0, 28, title, 15, "middle");
  out += text_at(x0 - 6, y0 + 6, std::to_string(peak), 10, "end");
  out += text_at(x0 - 6, y0 + plot_h, "0", 10, "end");

  const double bar_w = plot_w / counts.size();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    double h = static_cast<double>(counts[k]) / peak * plot_h;
    out += "<rect x=\"" + num(x0 + k * bar_w) + "\" y=\"" + num(y0 + plot_h - h) + "\" width=\"" +
           num(std::max(1.0, bar_w - 1.0)) + "\" height=\"" + num(h) +
           "\" fill=\"#1f77b4\"/>\n";
  }
  // Sparse labels to stay readable on wide ranges.
  int step = std::max(1, static_cast<int>(counts.size()) / 10);
  for (std::size_t k = 0; k < counts.size(); k += static_cast<std::size_t>(step)) {
    out += text_at(x0 + k * bar_w + bar_w / 2, y0 + plot_h + 14,
                   std::to_string(first_label + static_cast<int>(k)), 9, "middle");
  }
  out += "</svg>\n";
  return out;
}

std::string svg_heatmap(const std::string& title, int size, const std::vector<int>& counts) {
  const double cell = std::max(4.0, 480.0 / size);
  const int width = static_cast<int>(cell * size) + 110;
  const int height = static_cast<int>(cell * size) + 90;
  const double x0 = 70, y0 = 50;

  int peak = 1;
  for (int c : counts) peak = std::max(peak, c);

  std::string out = open_svg(width, height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += text_at(width / 2.0, 28, title, 15, "middle");

  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      int c = counts[static_cast<std::size_t>(i) * size + j];
      if (c == 0) continue;
      // log scale keeps sparse heavy diagonals visible
      double level = std::log1p(static_cast<double>(c)) / std::log1p(static_cast<double>(peak));
      int shade = 255 - static_cast<int>(level * 205.0);
      out += "<rect x=\"" + num(x0 + j * cell) + "\" y=\"" + num(y0 + i * cell) + "\" width=\"" +
             num(cell) + "\" height=\"" + num(cell) + "\" fill=\"rgb(" + std::to_string(shade) +
             "," + std::to_string(shade) + ",255)\"/>\n";
    }
  }
  out += "<rect x=\"" + num(x0) + "\" y=\"" + num(y0) + "\" width=\"" + num(cell * size) +
         "\" height=\"" + num(cell * size) + "\" fill=\"none\" stroke=\"#888\"/>\n";
  out += text_at(x0 + cell * size / 2, y0 + cell * size + 24, "next", 11, "middle");
  out += text_at(x0 - 40, y0 + cell * size / 2, "prev", 11, "middle");
  out += text_at(x0 - 6, y0 + 10, "0", 9, "end");
  out += text_at(x0 - 6, y0 + cell * size, std::to_string(size - 1), 9, "end");
  out += text_at(x0 + 4, y0 + cell * size + 12, "0", 9, "middle");
  out += text_at(x0 + cell * size - 4, y0 + cell * size + 12, std::to_string(size - 1), 9,
                 "middle");
  out += "</svg>\n";
  return out;
}

}  // namespace wbrl
