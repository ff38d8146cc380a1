#include "amlink/table_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "amlink/display.hpp"
#include "amlink/errors.hpp"

namespace amlink {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma == std::string_view::npos ? line.npos
                                                                             : comma - start)));
    if (comma == std::string_view::npos) {
      return cells;
    }
    start = comma + 1;
  }
}

double parse_number(std::string_view cell, std::size_t row, std::size_t column) {
  if (cell.empty()) {
    throw ParseError(row, column, "empty descriptor cell");
  }
  std::string_view digits = cell.front() == '+' ? cell.substr(1) : cell;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ParseError(row, column, "'" + std::string(cell) + "' is not a number");
  }
  if (!std::isfinite(value)) {
    throw ParseError(row, column, "'" + std::string(cell) + "' is not finite");
  }
  return value;
}

template <typename Rows>
std::string render(const std::vector<std::string>& labels,
                   const std::vector<std::string>& column_names, std::string_view label_header,
                   Rows&& row_of) {
  std::string out(label_header);
  for (const auto& name : column_names) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out += labels[i];
    for (double v : row_of(i)) {
      out += ',';
      out += format_exact(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

Dataset parse_table(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }
  std::vector<std::string> column_names;
  std::vector<std::string> labels;
  std::vector<double> values;
  std::unordered_map<std::string, std::size_t> first_seen;
  bool have_header = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto newline = text.find('\n', pos);
    const auto line = text.substr(pos, newline == text.npos ? text.npos : newline - pos);
    pos = newline == text.npos ? text.size() + 1 : newline + 1;
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    const auto cells = split_cells(line);
    if (!have_header) {
      if (cells.size() < 2) {
        throw ParseError(line_no, 0, "header needs a label column and at least one descriptor");
      }
      for (std::size_t k = 1; k < cells.size(); ++k) {
        if (cells[k].empty()) {
          throw ParseError(line_no, k + 1, "empty column name");
        }
        column_names.emplace_back(cells[k]);
      }
      have_header = true;
      continue;
    }
    if (cells.size() != column_names.size() + 1) {
      throw ParseError(line_no, 0,
                       "expected " + std::to_string(column_names.size() + 1) + " cells, found " +
                           std::to_string(cells.size()));
    }
    std::string label(cells[0]);
    if (label.empty()) {
      throw ParseError(line_no, 1, "empty label");
    }
    if (auto [it, fresh] = first_seen.emplace(label, line_no); !fresh) {
      throw ParseError(line_no, 1,
                       "duplicate label '" + label + "' (first on row " +
                           std::to_string(it->second) + ")");
    }
    for (std::size_t k = 1; k < cells.size(); ++k) {
      values.push_back(parse_number(cells[k], line_no, k + 1));
    }
    labels.push_back(std::move(label));
  }
  if (!have_header) {
    throw ParseError(0, 0, "empty input");
  }
  if (labels.empty()) {
    throw ParseError(0, 0, "table has a header but no data rows");
  }
  return Dataset(std::move(labels), std::move(column_names), std::move(values));
}

Dataset read_table_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open input file '" + path.string() + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_table(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(e.row(), e.column(), path.string() + ": " + e.reason());
  }
}

std::string write_table(const Dataset& data, std::string_view label_header) {
  return render(data.labels(), data.column_names(), label_header,
                [&](std::size_t i) { return data.row(i); });
}

std::string write_table(const NormalizedDataset& data, std::string_view label_header) {
  return render(data.labels(), data.column_names(), label_header,
                [&](std::size_t i) { return data.row(i); });
}

}  // namespace amlink
