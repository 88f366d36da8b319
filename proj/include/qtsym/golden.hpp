#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qtsym::golden {

struct Disputed {
  std::string row;
  std::string col;
  std::string note;
};

struct Table {
  std::string name;
  std::string title;
  std::string row_key;
  std::string col_key;
  std::vector<std::string> col_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;  // printed values, rows may be short
  std::vector<Disputed> disputed;
};

// Throws std::runtime_error with the line number on malformed input.
Table parse_table(std::string_view text, std::string name = "");
Table load_table(const std::string& name, const std::string& dir = QTSYM_DATA_DIR);
const std::vector<std::string>& table_names();

struct CellDiff {
  std::string row;
  std::string col;
  std::string printed;
  std::string computed;
  bool disputed = false;
};

struct Reproduction {
  Table golden;
  std::vector<std::vector<std::string>> computed;  // same shape as golden.cells
  std::vector<CellDiff> diffs;
  bool ok = true;  // no undisputed differences (or none at all when strict)
  std::string text;
};

// Recomputes every cell, spreading the cells over `threads` workers.
Reproduction reproduce(const std::string& name, bool strict = false, unsigned threads = 0,
                       const std::string& dir = QTSYM_DATA_DIR);

}  // namespace qtsym::golden
