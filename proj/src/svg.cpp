#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "metrotrade/table.hpp"

namespace metrotrade {
namespace {

constexpr double kWidth = 640.0;
constexpr double kPanelHeight = 320.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 40.0;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b",
                                    "#e377c2", "#17becf"};

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  // Data extent plus a 5% margin on each side.
  void pad() {
    if (!(hi > lo)) {
      const double half = lo == 0.0 ? 1.0 : std::fabs(lo) * 0.5;
      lo -= half;
      hi += half;
    }
    const double margin = 0.05 * (hi - lo);
    lo -= margin;
    hi += margin;
  }
};

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string fixed(double v) {
  char buffer[64];
  const auto r = std::to_chars(buffer, buffer + sizeof(buffer), v,
                               std::chars_format::fixed, 2);
  return std::string(buffer, r.ptr);
}

std::string tick_label(double v, bool log_scale) {
  const double shown = log_scale ? std::pow(10.0, v) : v;
  char buffer[64];
  const auto r = std::to_chars(buffer, buffer + sizeof(buffer), shown,
                               std::chars_format::general, 4);
  return std::string(buffer, r.ptr);
}

std::vector<Series> collect_series(const Table& table, const ChartPanel& panel) {
  const auto x_col = table.column(panel.x_column);
  const bool grouped = !panel.group_column.empty();
  const auto group_col = grouped ? table.column(panel.group_column) : 0;
  const bool filtered = !panel.filter_column.empty();
  const auto filter_col = filtered ? table.column(panel.filter_column) : 0;

  std::vector<Series> series;
  std::map<std::string, std::size_t> index;
  for (const auto& y_name : panel.y_columns) {
    const auto y_col = table.column(y_name);
    for (const auto& row : table.rows()) {
      if (filtered && row[filter_col] != panel.filter_value) continue;
      const auto x = parse_real_cell(row[x_col]);
      const auto y = parse_real_cell(row[y_col]);
      if (!x || !y || !std::isfinite(*x) || !std::isfinite(*y)) continue;
      if ((panel.log_x && *x <= 0.0) || (panel.log_y && *y <= 0.0)) continue;
      std::string label = y_name;
      if (grouped) label += " " + panel.group_column + "=" + row[group_col];
      auto [it, inserted] = index.try_emplace(label, series.size());
      if (inserted) series.push_back({label, {}});
      series[it->second].points.emplace_back(
          panel.log_x ? std::log10(*x) : *x, panel.log_y ? std::log10(*y) : *y);
    }
  }
  return series;
}

void render_panel(std::string& out, const Table& table, const ChartPanel& panel,
                  double y_offset) {
  const auto series = collect_series(table, panel);
  Range xr;
  Range yr;
  for (const auto& s : series) {
    for (const auto& [x, y] : s.points) {
      xr.include(x);
      yr.include(y);
    }
  }
  if (!std::isfinite(xr.lo)) xr = {0.0, 1.0};
  if (!std::isfinite(yr.lo)) yr = {0.0, 1.0};
  xr.pad();
  yr.pad();

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kPanelHeight - kTop - kBottom;
  auto sx = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
  auto sy = [&](double y) {
    return y_offset + kTop + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * plot_h;
  };

  out += "<g>\n";
  out += "<text x=\"" + fixed(kWidth / 2) + "\" y=\"" + fixed(y_offset + 18) +
         "\" text-anchor=\"middle\" font-size=\"14\">" +
         escape_xml(panel.title) + "</text>\n";
  out += "<rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(y_offset + kTop) +
         "\" width=\"" + fixed(plot_w) + "\" height=\"" + fixed(plot_h) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    out += "<text x=\"" + fixed(sx(fx)) + "\" y=\"" +
           fixed(y_offset + kTop + plot_h + 16) +
           "\" text-anchor=\"middle\" font-size=\"10\">" +
           tick_label(fx, panel.log_x) + "</text>\n";
    out += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(sy(fy) + 3) +
           "\" text-anchor=\"end\" font-size=\"10\">" +
           tick_label(fy, panel.log_y) + "</text>\n";
  }
  out += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" +
         fixed(y_offset + kPanelHeight - 6) +
         "\" text-anchor=\"middle\" font-size=\"11\">" +
         escape_xml(panel.x_column) + (panel.log_x ? " (log)" : "") +
         "</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
           "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < series[i].points.size(); ++j) {
      if (j) out += ' ';
      out += fixed(sx(series[i].points[j].first)) + "," +
             fixed(sy(series[i].points[j].second));
    }
    out += "\"><title>" + escape_xml(series[i].label) + "</title></polyline>\n";
    out += "<text x=\"" + fixed(kLeft + 8) + "\" y=\"" +
           fixed(y_offset + kTop + 14 + 13.0 * static_cast<double>(i)) +
           "\" font-size=\"10\" fill=\"" + color + "\">" +
           escape_xml(series[i].label) + "</text>\n";
  }
  out += "</g>\n";
}

}  // namespace

std::string render_svg(const Table& table,
                       const std::vector<ChartPanel>& panels) {
  const double height = kPanelHeight * static_cast<double>(panels.size());
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
      fixed(kWidth) + " " + fixed(height) + "\" width=\"" + fixed(kWidth) +
      "\" height=\"" + fixed(height) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth) + "\" height=\"" +
         fixed(height) + "\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < panels.size(); ++i) {
    render_panel(out, table, panels[i], kPanelHeight * static_cast<double>(i));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace metrotrade
