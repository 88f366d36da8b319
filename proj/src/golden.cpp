#include "qtsym/golden.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "qtsym/expr.hpp"
#include "qtsym/tamari.hpp"

namespace qtsym::golden {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string rest_after(const std::string& line, const std::string& key) {
  std::string r = line.substr(key.size());
  size_t b = r.find_first_not_of(" \t");
  return b == std::string::npos ? "" : r.substr(b);
}

using CellFn = std::function<ParamRat(const std::string& row, const std::string& col)>;

int as_int(const std::string& s) { return std::stoi(s); }

CellFn cell_function(const std::string& name) {
  if (name == "table1")
    return [](const std::string& n, const std::string& m) {
      return ParamRat(static_cast<long>(dyck_paths(as_int(m), as_int(n)).size()));
    };
  if (name == "table2")
    return [](const std::string& n, const std::string& m) { return ParamRat(parking_count(as_int(m), as_int(n))); };
  if (name == "table3")
    return [](const std::string& n, const std::string& m) { return ParamRat(interval_count(as_int(m), as_int(n))); };
  if (name == "table4")
    return [](const std::string& n, const std::string& m) { return ParamRat(decorated_count(as_int(m), as_int(n))); };
  if (name == "kostka4")
    return [](const std::string& l, const std::string& mu) {
      return ParamRat(kostka(Partition::parse(l), Partition::parse(mu)));
    };
  if (name == "qkostka4")
    return [](const std::string& l, const std::string& mu) {
      return kostka_foulkes(Partition::parse(l), Partition::parse(mu));
    };
  if (name == "qtkostka4")
    return [](const std::string& mu, const std::string& l) {
      return qt_kostka(Partition::parse(l), Partition::parse(mu));
    };
  throw std::runtime_error("unknown table '" + name + "'");
}

std::string pad(const std::string& s, size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

std::string format_grid(const Table& t, const std::vector<std::vector<std::string>>& cells) {
  std::vector<size_t> width(t.col_labels.size() + 1, 0);
  width[0] = t.row_key.size() + 1 + t.col_key.size();
  for (const auto& r : t.row_labels) width[0] = std::max(width[0], r.size());
  for (size_t j = 0; j < t.col_labels.size(); ++j) width[j + 1] = t.col_labels[j].size();
  for (const auto& row : cells)
    for (size_t j = 0; j < row.size(); ++j) width[j + 1] = std::max(width[j + 1], row[j].size());
  std::string out = pad(t.row_key + "\\" + t.col_key, width[0]);
  for (size_t j = 0; j < t.col_labels.size(); ++j) out += "  " + pad(t.col_labels[j], width[j + 1]);
  out += "\n";
  for (size_t i = 0; i < cells.size(); ++i) {
    std::string line = pad(t.row_labels[i], width[0]);
    for (size_t j = 0; j < cells[i].size(); ++j) line += "  " + pad(cells[i][j], width[j + 1]);
    out += line + "\n";
  }
  return out;
}

bool is_disputed(const Table& t, const std::string& row, const std::string& col) {
  return std::any_of(t.disputed.begin(), t.disputed.end(),
                     [&](const Disputed& d) { return d.row == row && d.col == col; });
}

}  // namespace

Table parse_table(std::string_view text, std::string name) {
  Table t;
  t.name = std::move(name);
  std::istringstream in{std::string(text)};
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("table " + t.name + " line " + std::to_string(lineno) + ": " + why);
  };
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.rfind("title ", 0) == 0) {
      t.title = rest_after(line, "title");
    } else if (line.rfind("rows ", 0) == 0) {
      t.row_key = rest_after(line, "rows");
    } else if (line.rfind("cols ", 0) == 0) {
      t.col_key = rest_after(line, "cols");
    } else if (line.rfind("columns ", 0) == 0) {
      t.col_labels = split_ws(rest_after(line, "columns"));
    } else if (line.rfind("disputed ", 0) == 0) {
      auto w = split_ws(rest_after(line, "disputed"));
      if (w.size() < 2) fail("disputed needs a row and a column label");
      std::string note = rest_after(line, "disputed");
      note = rest_after(rest_after(note, w[0]), w[1]);
      t.disputed.push_back({w[0], w[1], note});
    } else {
      size_t colon = line.find(':');
      if (colon == std::string::npos) fail("expected '<row label>: cells'");
      auto lab = split_ws(line.substr(0, colon));
      if (lab.size() != 1) fail("bad row label");
      auto cells = split_ws(line.substr(colon + 1));
      if (cells.size() > t.col_labels.size()) fail("more cells than columns");
      for (const auto& c : cells) {
        try {
          expr::parse(c);
        } catch (const expr::ParseError& e) {
          fail("cell '" + c + "': " + e.what());
        }
      }
      t.row_labels.push_back(lab[0]);
      t.cells.push_back(cells);
    }
  }
  if (t.col_labels.empty()) fail("missing columns line");
  for (const auto& d : t.disputed) {
    auto r = std::find(t.row_labels.begin(), t.row_labels.end(), d.row);
    auto c = std::find(t.col_labels.begin(), t.col_labels.end(), d.col);
    if (r == t.row_labels.end() || c == t.col_labels.end() ||
        static_cast<size_t>(c - t.col_labels.begin()) >= t.cells[r - t.row_labels.begin()].size())
      throw std::runtime_error("table " + t.name + ": disputed cell " + d.row + "," + d.col + " does not exist");
  }
  return t;
}

Table load_table(const std::string& name, const std::string& dir) {
  const auto& names = table_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw std::runtime_error("unknown table '" + name + "'");
  std::ifstream f(dir + "/" + name + ".txt");
  if (!f) throw std::runtime_error("cannot open " + dir + "/" + name + ".txt");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_table(ss.str(), name);
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"table1",  "table2",   "table3",   "table4",
                                                 "kostka4", "qkostka4", "qtkostka4"};
  return names;
}

Reproduction reproduce(const std::string& name, bool strict, unsigned threads, const std::string& dir) {
  Reproduction r;
  r.golden = load_table(name, dir);
  const Table& t = r.golden;
  CellFn fn = cell_function(name);

  std::vector<std::pair<size_t, size_t>> jobs;
  r.computed.resize(t.cells.size());
  for (size_t i = 0; i < t.cells.size(); ++i) {
    r.computed[i].resize(t.cells[i].size());
    for (size_t j = 0; j < t.cells[i].size(); ++j) jobs.emplace_back(i, j);
  }
  // Largest Tamari cells last in row-major order; hand them out first.
  std::reverse(jobs.begin(), jobs.end());
  std::vector<ParamRat> values(jobs.size());
  std::vector<std::string> errors(jobs.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      auto [i, j] = jobs[k];
      try {
        values[k] = fn(t.row_labels[i], t.col_labels[j]);
      } catch (const std::exception& e) {
        errors[k] = e.what();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  for (size_t k = 0; k < jobs.size(); ++k) {
    auto [i, j] = jobs[k];
    r.computed[i][j] = errors[k].empty() ? values[k].to_string() : "error: " + errors[k];
  }
  for (size_t i = 0; i < t.cells.size(); ++i)
    for (size_t j = 0; j < t.cells[i].size(); ++j) {
      ParamRat printed = expr::evaluate(expr::parse(t.cells[i][j])).scalar;
      if (printed.to_string() == r.computed[i][j]) continue;
      bool disputed = is_disputed(t, t.row_labels[i], t.col_labels[j]);
      r.diffs.push_back({t.row_labels[i], t.col_labels[j], t.cells[i][j], r.computed[i][j], disputed});
      if (strict || !disputed) r.ok = false;
    }

  std::string out = t.title + "\n" + format_grid(t, r.computed);
  if (r.diffs.empty()) {
    out += "all " + std::to_string(jobs.size()) + " cells match\n";
  } else {
    for (const auto& d : r.diffs) {
      out += (d.disputed ? "disputed " : "mismatch ") + t.row_key + "=" + d.row + " " + t.col_key + "=" + d.col +
             ": printed " + d.printed + ", computed " + d.computed;
      if (d.disputed)
        for (const auto& note : t.disputed)
          if (note.row == d.row && note.col == d.col && !note.note.empty()) out += " (" + note.note + ")";
      out += "\n";
    }
    size_t undisputed = std::count_if(r.diffs.begin(), r.diffs.end(), [](const CellDiff& d) { return !d.disputed; });
    out += std::to_string(jobs.size() - r.diffs.size()) + " of " + std::to_string(jobs.size()) + " cells match, " +
           std::to_string(undisputed) + " mismatched, " + std::to_string(r.diffs.size() - undisputed) +
           " disputed\n";
  }
  r.text = out;
  return r;
}

}  // namespace qtsym::golden
