#include "qtsym/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace qtsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ShapeError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ShapeError("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ShapeError("unbalanced partition brackets: " + std::string(text));
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  if (s.find(',') != std::string::npos) {
    size_t pos = 0;
    while (pos <= s.size()) {
      size_t next = s.find(',', pos);
      std::string item = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
        throw ShapeError("bad partition: " + std::string(text));
      parts.push_back(std::stoi(item));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  } else {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ShapeError("bad partition: " + std::string(text));
      parts.push_back(c - '0');
    }
  }
  return Partition(std::move(parts));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> d(parts_.empty() ? 1 : parts_[0] + 1, 0);
  for (int p : parts_) ++d[p];
  return d;
}

BigInt Partition::z() const {
  BigInt z = 1;
  auto d = multiplicities();
  for (size_t i = 1; i < d.size(); ++i) {
    BigInt ip;
    mpz_ui_pow_ui(ip.get_mpz_t(), i, d[i]);
    z *= ip * factorial(d[i]);
  }
  return z;
}

long Partition::n() const {
  long s = 0;
  for (size_t i = 0; i < parts_.size(); ++i) s += static_cast<long>(i) * parts_[i];
  return s;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > (*this)[i]) return false;
  return true;
}

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  for (int y = 0; y < length(); ++y)
    for (int x = 0; x < parts_[y]; ++x) out.push_back({x, y});
  return out;
}

std::vector<Cell> Partition::corners() const {
  std::vector<Cell> out;
  for (int y = 0; y < length(); ++y)
    if ((*this)[y + 1] < parts_[y]) out.push_back({parts_[y] - 1, y});
  return out;
}

int Partition::leg(Cell c) const {
  int h = 0;
  while ((*this)[c.y + 1 + h] > c.x) ++h;
  return h;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  bool small = std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 9; });
  std::string out;
  if (small) {
    for (int p : parts_) out += static_cast<char>('0' + p);
    return out;
  }
  out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out + "]";
}

std::vector<CellData> cell_data(const Partition& mu) {
  std::vector<CellData> out;
  for (Cell c : mu.cells()) out.push_back({c, mu.arm(c), mu.leg(c), mu.hook(c)});
  return out;
}

PartitionStats stats(const Partition& mu) { return {mu.size(), mu.length(), mu.z(), mu.n()}; }

bool dominates(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw ShapeError("dominance needs partitions of equal size");
  int a = 0, b = 0;
  for (int k = 0; k < std::max(mu.length(), lambda.length()); ++k) {
    a += lambda[k];
    b += mu[k];
    if (a > b) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur, const std::optional<Partition>& outer,
                    std::optional<int> max_len, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  int row = static_cast<int>(cur.size());
  if (max_len && row >= *max_len) return;
  int cap = std::min(max_part, remaining);
  if (outer) cap = std::min(cap, (*outer)[row]);
  for (int p = cap; p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, cur, outer, max_len, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, const std::optional<Partition>& outer, std::optional<int> max_len) {
  if (n < 0) return {};
  if (!outer && !max_len) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<int> cur;
    std::vector<Partition> out;
    gen_partitions(n, n, cur, outer, max_len, out);
    return cache[n] = out;
  }
  std::vector<int> cur;
  std::vector<Partition> out;
  gen_partitions(n, n, cur, outer, max_len, out);
  return out;
}

std::vector<Partition> subpartitions(const Partition& outer) {
  std::vector<Partition> out;
  for (int k = 0; k <= outer.size(); ++k) {
    auto level = enumerate_partitions(k, outer);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// ---------------------------------------------------------------- tableaux

SkewShape::SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
  if (!outer.contains(inner)) throw ShapeError("skew shape inner partition must fit inside outer");
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int y = 0; y < outer.length(); ++y)
    for (int x = inner[y]; x < outer[y]; ++x) out.push_back({x, y});
  return out;
}

std::string SkewShape::to_string() const {
  if (inner.empty()) return outer.to_string();
  return outer.to_string() + "/" + inner.to_string();
}

Tableau::Tableau(std::vector<std::vector<int>> straight_rows) {
  std::vector<int> parts;
  for (const auto& r : straight_rows) parts.push_back(static_cast<int>(r.size()));
  shape = SkewShape(Partition(parts));
  while (!straight_rows.empty() && straight_rows.back().empty()) straight_rows.pop_back();
  rows = std::move(straight_rows);
}

Tableau::Tableau(SkewShape s, std::vector<std::vector<int>> r) : shape(std::move(s)), rows(std::move(r)) {
  rows.resize(shape.outer.length());
  for (int y = 0; y < shape.outer.length(); ++y)
    if (static_cast<int>(rows[y].size()) != shape.outer[y] - shape.inner[y])
      throw ShapeError("tableau row length does not match its shape");
}

std::string Tableau::to_string() const {
  std::string out = "[";
  for (size_t y = 0; y < rows.size(); ++y) {
    out += y ? ",[" : "[";
    for (size_t i = 0; i < rows[y].size(); ++i) out += (i ? "," : "") + std::to_string(rows[y][i]);
    out += "]";
  }
  return out + "]";
}

bool is_semistandard(const Tableau& t) {
  for (Cell c : t.shape.cells()) {
    if (t.at(c) < 1) return false;
    Cell left{c.x - 1, c.y}, below{c.x, c.y - 1};
    if (t.shape.has_cell(left) && t.at(left) > t.at(c)) return false;
    if (t.shape.has_cell(below) && t.at(below) >= t.at(c)) return false;
  }
  return true;
}

bool is_standard(const Tableau& t) {
  if (!is_semistandard(t)) return false;
  auto c = content(t);
  return static_cast<int>(c.size()) == t.size() && std::all_of(c.begin(), c.end(), [](int k) { return k == 1; });
}

std::vector<int> content(const Tableau& t) {
  std::vector<int> c;
  for (const auto& row : t.rows)
    for (int v : row) {
      if (v > static_cast<int>(c.size())) c.resize(v, 0);
      ++c[v - 1];
    }
  return c;
}

std::vector<int> reading_word(const Tableau& t) {
  std::vector<int> w;
  for (auto it = t.rows.rbegin(); it != t.rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

namespace {

// Fill cells in reading order (top row first, left to right) so the cell
// above and the cell to the left are always known.
struct SsytFiller {
  const SkewShape& shape;
  std::vector<Cell> order;
  std::vector<int> remaining;  // empty = bounded mode
  int max_entry;
  Tableau current;
  std::vector<Tableau> out;

  SsytFiller(const SkewShape& s, std::vector<int> rem, int maxe) : shape(s), remaining(std::move(rem)), max_entry(maxe) {
    for (int y = shape.outer.length() - 1; y >= 0; --y)
      for (int x = shape.inner[y]; x < shape.outer[y]; ++x) order.push_back({x, y});
    std::vector<std::vector<int>> rows(shape.outer.length());
    for (int y = 0; y < shape.outer.length(); ++y) rows[y].assign(shape.outer[y] - shape.inner[y], 0);
    current = Tableau(shape, rows);
  }

  int& slot(Cell c) { return current.rows[c.y][c.x - shape.inner[c.y]]; }

  void run(size_t k) {
    if (k == order.size()) {
      out.push_back(current);
      return;
    }
    Cell c = order[k];
    Cell left{c.x - 1, c.y}, above{c.x, c.y + 1};
    int lo = shape.has_cell(left) ? slot(left) : 1;
    int hi = shape.has_cell(above) ? std::min(max_entry, slot(above) - 1) : max_entry;
    for (int v = lo; v <= hi; ++v) {
      if (!remaining.empty() && remaining[v - 1] == 0) continue;
      slot(c) = v;
      if (!remaining.empty()) --remaining[v - 1];
      run(k + 1);
      if (!remaining.empty()) ++remaining[v - 1];
    }
    slot(c) = 0;
  }
};

}  // namespace

std::vector<Tableau> ssyt(const SkewShape& shape, const std::vector<int>& content_vec) {
  int total = std::accumulate(content_vec.begin(), content_vec.end(), 0);
  if (total != shape.size()) return {};
  if (shape.size() == 0) return {Tableau(shape, {})};
  SsytFiller f(shape, content_vec, static_cast<int>(content_vec.size()));
  f.run(0);
  return std::move(f.out);
}

std::vector<Tableau> ssyt_bounded(const SkewShape& shape, int max_entry) {
  if (shape.size() == 0) return {Tableau(shape, {})};
  SsytFiller f(shape, {}, max_entry);
  f.run(0);
  return std::move(f.out);
}

std::vector<Tableau> standard_tableaux(const Partition& shape) {
  return ssyt(SkewShape(shape), std::vector<int>(shape.size(), 1));
}

BigInt hook_count(const Partition& mu) {
  BigInt prod = 1;
  for (const auto& cd : cell_data(mu)) prod *= cd.hook;
  return factorial(mu.size()) / prod;
}

ParamRat hook_count_q(const Partition& mu) {
  ParamRat num = ParamRat::q(static_cast<int>(mu.n())) * q_factorial(mu.size());
  ParamRat den(1);
  for (const auto& cd : cell_data(mu)) den *= q_integer(cd.hook);
  return divide_exact(num, den);
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ShapeError("kostka needs partitions of equal size");
  return BigInt(static_cast<unsigned long>(ssyt(SkewShape(lambda), mu.parts()).size()));
}

ParamRat q_binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return ParamRat(0);
  std::vector<ParamRat> row(1, ParamRat(1));
  for (int m = 1; m <= n; ++m) {
    std::vector<ParamRat> next(m + 1);
    for (int j = 0; j <= m; ++j) {
      ParamRat a = j >= 1 ? row[j - 1] : ParamRat(0);
      ParamRat b = j < m ? row[j] * ParamRat::q(j) : ParamRat(0);
      next[j] = a + b;
    }
    row = std::move(next);
  }
  return row[k];
}

ParamRat subpartition_poly(const Partition& mu) {
  ParamRat r;
  for (const auto& nu : subpartitions(mu)) r += ParamRat::q(nu.size());
  return r;
}

ParamRat q_catalan_square(int n) {
  std::vector<ParamRat> c(1, ParamRat(1));
  for (int m = 1; m <= n; ++m) {
    ParamRat s;
    for (int j = 1; j <= m; ++j) s += ParamRat::q(j * (m - j)) * c[j - 1] * c[m - j];
    c.push_back(s);
  }
  return c[n];
}

// ---------------------------------------------------------------- charge

Tableau minimize(const Tableau& t) {
  if (!t.shape.inner.empty() || !is_semistandard(t)) throw ShapeError("minimization needs a straight-shape SSYT");
  std::vector<Cell> order = t.shape.cells();
  std::stable_sort(order.begin(), order.end(), [&](Cell a, Cell b) {
    if (t.at(a) != t.at(b)) return t.at(a) < t.at(b);
    return a.x < b.x;
  });
  Tableau m = t;
  int value = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i].x <= order[i - 1].x) ++value;
    m.rows[order[i].y][order[i].x] = value;
  }
  return m;
}

long cocharge(const Tableau& t) {
  long s = 0;
  for (const auto& row : minimize(t).rows)
    for (int v : row) s += v;
  return s;
}

namespace {

// Charge of a word with partition content: peel off standard subwords by
// scanning leftwards cyclically for 1, 2, ...; a wrap-around raises the index.
long word_charge(std::vector<int> w) {
  long total = 0;
  const int used = 0;
  while (true) {
    int len = static_cast<int>(w.size());
    int pos = -1;
    for (int i = len - 1; i >= 0; --i)
      if (w[i] == 1) {
        pos = i;
        break;
      }
    if (pos < 0) return total;
    w[pos] = used;
    int letter = 2, index = 0;
    while (true) {
      int found = -1;
      for (int step = 1; step <= len; ++step) {
        int i = ((pos - step) % len + len) % len;
        if (w[i] == letter) {
          found = i;
          if (pos - step < 0) ++index;
          break;
        }
      }
      if (found < 0) break;
      total += index;
      w[found] = used;
      pos = found;
      ++letter;
    }
  }
}

}  // namespace

long charge(const Tableau& t) {
  auto c = content(t);
  if (std::is_sorted(c.rbegin(), c.rend())) return word_charge(reading_word(t));
  long n = 0;
  for (size_t i = 0; i < c.size(); ++i) n += static_cast<long>(i) * c[i];
  return n - cocharge(t);
}

ParamRat kostka_foulkes(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ShapeError("kostka_foulkes needs partitions of equal size");
  ParamRat r;
  for (const auto& t : ssyt(SkewShape(lambda), mu.parts())) r += ParamRat::q(static_cast<int>(charge(t)));
  return r;
}

BigInt bpr_denominator(int n) {
  BigInt prod = 1;
  auto parts = enumerate_partitions(n);
  for (const auto& lambda : parts) {
    BigInt s = 0;
    for (const auto& mu : parts) s += kostka(lambda, mu);
    prod *= s;
  }
  return prod;
}

// ---------------------------------------------------------------- RSK

Insertion insert(const Tableau& p, int a) {
  if (!p.shape.inner.empty()) throw ShapeError("insertion needs a straight-shape tableau");
  std::vector<std::vector<int>> rows = p.rows;
  int y = 0;
  while (true) {
    if (y == static_cast<int>(rows.size())) rows.emplace_back();
    auto& row = rows[y];
    auto it = std::upper_bound(row.begin(), row.end(), a);
    if (it == row.end()) {
      row.push_back(a);
      return {Tableau(rows), Cell{static_cast<int>(row.size()) - 1, y}};
    }
    std::swap(*it, a);
    ++y;
  }
}

Tableau insert_word(const std::vector<int>& word, Tableau start) {
  for (int a : word) start = insert(start, a).tableau;
  return start;
}

Biword::Biword(std::vector<int> t, std::vector<int> b) : top(std::move(t)), bottom(std::move(b)) {
  if (top.size() != bottom.size()) throw ShapeError("biword rows must have equal length");
  for (size_t i = 0; i + 1 < top.size(); ++i)
    if (top[i] > top[i + 1] || (top[i] == top[i + 1] && bottom[i] > bottom[i + 1]))
      throw ShapeError("biword is not in lexicographic order");
}

Biword Biword::from_word(const std::vector<int>& word) {
  std::vector<int> t(word.size());
  std::iota(t.begin(), t.end(), 1);
  return Biword(t, word);
}

Biword Biword::inverse() const {
  std::vector<std::pair<int, int>> cols;
  for (size_t i = 0; i < top.size(); ++i) cols.emplace_back(bottom[i], top[i]);
  std::sort(cols.begin(), cols.end());
  std::vector<int> t, b;
  for (auto [x, y] : cols) {
    t.push_back(x);
    b.push_back(y);
  }
  return Biword(t, b);
}

std::pair<Tableau, Tableau> rsk(const Biword& w) {
  Tableau p, q;
  for (size_t i = 0; i < w.size(); ++i) {
    Insertion ins = insert(p, w.bottom[i]);
    p = ins.tableau;
    auto rows = q.rows;
    if (ins.new_cell.y == static_cast<int>(rows.size())) rows.emplace_back();
    rows[ins.new_cell.y].push_back(w.top[i]);
    q = Tableau(rows);
  }
  return {p, q};
}

Biword unrsk(const Tableau& p, const Tableau& q) {
  if (!(p.shape == q.shape) || !p.shape.inner.empty()) throw ShapeError("unrsk needs two tableaux of one straight shape");
  if (!is_semistandard(p) || !is_semistandard(q)) throw ShapeError("unrsk needs semi-standard tableaux");
  auto prow = p.rows, qrow = q.rows;
  std::vector<int> top, bottom;
  while (!prow.empty()) {
    // Largest entry of Q; among equal ones, the rightmost was inserted last.
    int best_y = -1, best_x = -1, best = 0;
    for (int y = 0; y < static_cast<int>(qrow.size()); ++y) {
      int x = static_cast<int>(qrow[y].size()) - 1;
      int v = qrow[y][x];
      if (v > best || (v == best && x > best_x)) {
        best = v;
        best_x = x;
        best_y = y;
      }
    }
    qrow[best_y].pop_back();
    int a = prow[best_y].back();
    prow[best_y].pop_back();
    for (int y = best_y - 1; y >= 0; --y) {
      auto& row = prow[y];
      auto it = std::lower_bound(row.begin(), row.end(), a);
      --it;  // rightmost entry strictly smaller than a
      std::swap(*it, a);
    }
    while (!prow.empty() && prow.back().empty()) {
      prow.pop_back();
      qrow.pop_back();
    }
    top.push_back(best);
    bottom.push_back(a);
  }
  std::reverse(top.begin(), top.end());
  std::reverse(bottom.begin(), bottom.end());
  return Biword(top, bottom);
}

}  // namespace qtsym
