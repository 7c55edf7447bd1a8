#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace metrotrade {

/// Shortest-round-trip-safe decimal form: 17 significant digits, '.' decimal
/// separator, independent of the global locale.
std::string format_real(double value);

/// Parses a cell written by format_real (or any plain decimal). Returns
/// nullopt for empty or non-numeric cells.
std::optional<double> parse_real_cell(std::string_view cell);

/// Row-oriented table of pre-formatted cells; the CSV form is the canonical
/// output and every chart is rendered from it.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  class RowBuilder {
   public:
    explicit RowBuilder(Table& table) : table_(table) {}
    RowBuilder& add(double value);
    RowBuilder& add(std::uint64_t value);
    RowBuilder& add(int value);
    RowBuilder& add(std::string_view text);
    RowBuilder& add(const char* text) { return add(std::string_view(text)); }
    RowBuilder& empty();
    ~RowBuilder() noexcept(false);

    RowBuilder(const RowBuilder&) = delete;
    RowBuilder& operator=(const RowBuilder&) = delete;

   private:
    Table& table_;
    std::vector<std::string> cells_;
  };

  RowBuilder row() { return RowBuilder(*this); }
  void add_row(std::vector<std::string> cells);

  [[nodiscard]] const std::vector<std::string>& header() const {
    return header_;
  }
  [[nodiscard]] const std::vector<std::vector<std::string>>& rows() const {
    return rows_;
  }
  [[nodiscard]] std::size_t column(std::string_view name) const;

  /// Header plus rows, comma separated, LF terminated.
  [[nodiscard]] std::string to_csv() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// One chart panel: y columns plotted against an x column, one polyline per
/// y column and per distinct value of the optional group column.
struct ChartPanel {
  std::string title;
  std::string x_column;
  std::vector<std::string> y_columns;
  std::string group_column;  // empty: no grouping
  std::string filter_column;  // rows kept only where this column equals
  std::string filter_value;   // filter_value (empty: keep all)
  bool log_x = false;
  bool log_y = false;
};

/// Static SVG: vertically stacked panels, viewBox scaling, no external
/// resources. Axes span data min/max plus a 5% margin.
std::string render_svg(const Table& table, const std::vector<ChartPanel>& panels);

}  // namespace metrotrade
