#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "amlink/dataset.hpp"
#include "amlink/normalize.hpp"

namespace amlink {

/// Comma-separated table: header row, label in the first column, numeric
/// descriptors in the rest. Blank lines and a UTF-8 BOM are ignored; cells
/// are trimmed. Throws ParseError(row, column, reason) with 1-based file
/// line and column numbers.
Dataset parse_table(std::string_view text);

/// Reads and parses a file; an unreadable path raises Error naming it.
Dataset read_table_file(const std::filesystem::path& path);

/// Canonical text form. Values use the shortest exact decimal, so
/// parse_table(write_table(d)) == d up to the label column's header.
std::string write_table(const Dataset& data, std::string_view label_header = "label");

/// Same layout with z-scores in place of raw values.
std::string write_table(const NormalizedDataset& data, std::string_view label_header = "label");

}  // namespace amlink
