#include "metrotrade/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace metrotrade {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value,
                                    std::chars_format::general, 17);
  return std::string(buffer, result.ptr);
}

std::optional<double> parse_real_cell(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell == "inf") return HUGE_VAL;
  if (cell == "-inf") return -HUGE_VAL;
  double value = 0.0;
  const auto result =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (result.ec != std::errc() || result.ptr != cell.data() + cell.size()) {
    return std::nullopt;
  }
  return value;
}

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

Table::RowBuilder& Table::RowBuilder::add(double value) {
  cells_.push_back(format_real(value));
  return *this;
}

Table::RowBuilder& Table::RowBuilder::add(std::uint64_t value) {
  cells_.push_back(std::to_string(value));
  return *this;
}

Table::RowBuilder& Table::RowBuilder::add(int value) {
  cells_.push_back(std::to_string(value));
  return *this;
}

Table::RowBuilder& Table::RowBuilder::add(std::string_view text) {
  cells_.emplace_back(text);
  return *this;
}

Table::RowBuilder& Table::RowBuilder::empty() {
  cells_.emplace_back();
  return *this;
}

Table::RowBuilder::~RowBuilder() noexcept(false) { table_.add_row(std::move(cells_)); }

void Table::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw std::logic_error("row width does not match the table header");
  }
  rows_.push_back(std::move(cells));
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  throw std::out_of_range("no column named " + std::string(name));
}

std::string Table::to_csv() const {
  std::string out;
  auto append_row = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  append_row(header_);
  for (const auto& r : rows_) append_row(r);
  return out;
}

}  // namespace metrotrade
