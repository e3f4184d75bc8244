#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "eqsort/svg.hpp"

using eqsort::SvgSeries;

namespace {

std::size_t count_of(const std::string& hay, const std::string& needle) {
  std::size_t count = 0, pos = 0;
  while ((pos = hay.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("chart output is deterministic") {
  const std::vector<std::string> xs = {"2", "5", "100"};
  const std::vector<SvgSeries> series = {{"com-eqsort1", {0.62, 0.7, 0.8}, false}};
  const auto a = eqsort::render_line_chart("t", "ratio", xs, series);
  const auto b = eqsort::render_line_chart("t", "ratio", xs, series);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.rfind("</svg>") != std::string::npos);
}

TEST_CASE("no data rows renders axes only") {
  const auto svg = eqsort::render_line_chart("empty", "seconds", {}, {});
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("<polyline") == std::string::npos);
  CHECK(svg.find("<circle") == std::string::npos);
  CHECK(count_of(svg, "<line") >= 2);  // the two axes
}

TEST_CASE("a full series is one polyline with one point per category") {
  const std::vector<std::string> xs = {"1", "2", "3", "4"};
  const std::vector<SvgSeries> series = {{"T-eqsort1", {1.0, 2.0, 3.0, 2.5}, false}};
  const auto svg = eqsort::render_line_chart("t", "s", xs, series);
  CHECK(count_of(svg, "<polyline") == 1);
  CHECK(count_of(svg, "<circle") == 4);
}

TEST_CASE("absent values split the polyline") {
  const std::vector<std::string> xs = {"1", "2", "3"};
  std::vector<SvgSeries> series(1);
  series[0].label = "sw-eqsort2";
  series[0].values = {1.0, std::nullopt, 3.0};
  const auto svg = eqsort::render_line_chart("t", "s", xs, series);
  CHECK(count_of(svg, "<polyline") == 0);  // two runs of one point each
  CHECK(count_of(svg, "<circle") == 2);

  series[0].values = {1.0, 2.0, std::nullopt};
  const auto svg2 = eqsort::render_line_chart("t", "s", xs, series);
  CHECK(count_of(svg2, "<polyline") == 1);
  CHECK(count_of(svg2, "<circle") == 2);
}

TEST_CASE("a flat baseline series is a horizontal polyline") {
  const std::vector<std::string> xs = {"2", "5", "9", "50"};
  const std::vector<SvgSeries> series = {{"com-dualpivot/com-dualpivot", {1.0, 1.0, 1.0, 1.0},
                                          false}};
  const auto svg = eqsort::render_line_chart("ratios", "ratio", xs, series);
  const auto at = svg.find("points=\"");
  REQUIRE(at != std::string::npos);
  const auto end = svg.find('"', at + 8);
  const std::string points = svg.substr(at + 8, end - at - 8);
  // Every coordinate pair must share one y value.
  std::string first_y;
  std::size_t pos = 0;
  while (pos < points.size()) {
    const auto comma = points.find(',', pos);
    auto space = points.find(' ', comma);
    if (space == std::string::npos) space = points.size();
    const std::string y = points.substr(comma + 1, space - comma - 1);
    if (first_y.empty()) first_y = y;
    CHECK(y == first_y);
    pos = space + 1;
  }
  CHECK(!first_y.empty());
}

TEST_CASE("labels are xml-escaped and dashes are honored") {
  const std::vector<std::string> xs = {"1"};
  const std::vector<SvgSeries> series = {{"a<b&c", {1.0}, true}};
  const auto svg = eqsort::render_line_chart("x < y & z", "u", xs, series);
  CHECK(svg.find("x &lt; y &amp; z") != std::string::npos);
  CHECK(svg.find("a&lt;b&amp;c") != std::string::npos);
  CHECK(svg.find("a<b") == std::string::npos);
  CHECK(svg.find("stroke-dasharray") != std::string::npos);
}
