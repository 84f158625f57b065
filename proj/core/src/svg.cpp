// Copyright 2026 The dddepth authors.
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

#include "ddd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ddd/error.hpp"

namespace ddd {

namespace {

constexpr double kMarginLeft = 50.0;
constexpr double kMarginRight = 15.0;
constexpr double kMarginTop = 15.0;
constexpr double kMarginBottom = 35.0;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string write_ddd_svg(const std::vector<DddRecord>& records, unsigned width,
                          unsigned height) {
  if (width < 100 || height < 100) {
    throw ParameterError("svg canvas must be at least 100x100");
  }

  double y_abs = 0.05;  // fallback scale for an empty plot
  for (const auto& r : records) {
    y_abs = std::max({y_abs, std::abs(r.ddd), r.band_halfwidth});
  }
  y_abs *= 1.1;

  const double plot_w = width - kMarginLeft - kMarginRight;
  const double plot_h = height - kMarginTop - kMarginBottom;
  const double n_pts = records.empty() ? 1.0 : static_cast<double>(records.size());

  auto x_of = [&](double index) {
    return kMarginLeft + plot_w * (n_pts == 1.0 ? 0.5 : index / (n_pts - 1.0));
  };
  auto y_of = [&](double v) { return kMarginTop + plot_h * (1.0 - (v + y_abs) / (2.0 * y_abs)); };

  std::string svg;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
                "width=\"%u\" height=\"%u\" viewBox=\"0 0 %u %u\">\n",
                width, height, width, height);
  svg += buf;
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes: frame and the zero line.
  std::snprintf(buf, sizeof(buf),
                "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"none\" "
                "stroke=\"black\" stroke-width=\"1\"/>\n",
                fmt(kMarginLeft).c_str(), fmt(kMarginTop).c_str(), fmt(plot_w).c_str(),
                fmt(plot_h).c_str());
  svg += buf;
  std::snprintf(buf, sizeof(buf),
                "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"black\" "
                "stroke-width=\"1\"/>\n",
                fmt(kMarginLeft).c_str(), fmt(y_of(0.0)).c_str(),
                fmt(kMarginLeft + plot_w).c_str(), fmt(y_of(0.0)).c_str());
  svg += buf;

  if (!records.empty()) {
    // Dashed band curves at +/- halfwidth.
    for (int sign : {+1, -1}) {
      std::string path = "<polyline fill=\"none\" stroke=\"gray\" stroke-width=\"1\" "
                         "stroke-dasharray=\"4 3\" points=\"";
      for (std::size_t i = 0; i < records.size(); ++i) {
        path += fmt(x_of(static_cast<double>(i)));
        path += ",";
        path += fmt(y_of(sign * records[i].band_halfwidth));
        path += " ";
      }
      path += "\"/>\n";
      svg += path;
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
      std::snprintf(buf, sizeof(buf),
                    "<circle cx=\"%s\" cy=\"%s\" r=\"2.5\" fill=\"%s\"/>\n",
                    fmt(x_of(static_cast<double>(i))).c_str(), fmt(y_of(records[i].ddd)).c_str(),
                    records[i].outside ? "red" : "black");
      svg += buf;
    }
  }

  std::snprintf(buf, sizeof(buf),
                "<text x=\"%s\" y=\"%s\" font-size=\"12\" text-anchor=\"middle\">index</text>\n",
                fmt(kMarginLeft + plot_w / 2.0).c_str(), fmt(height - 10.0).c_str());
  svg += buf;
  std::snprintf(
      buf, sizeof(buf),
      "<text x=\"14\" y=\"%s\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 14 %s)\">ddd</text>\n",
      fmt(kMarginTop + plot_h / 2.0).c_str(), fmt(kMarginTop + plot_h / 2.0).c_str());
  svg += buf;
  svg += "</svg>\n";
  return svg;
}

}  // namespace ddd
