#include "qtsym/tamari.hpp"

#include <algorithm>
#include <map>

namespace qtsym {

namespace {

// 'N' / 'E' word from (0,0) to (m,n); the north step at height y has
// mu[n-1-y] east steps before it.
std::string to_word(int m, int n, const Partition& mu) {
  std::string w;
  int x = 0;
  for (int y = 0; y < n; ++y) {
    int target = mu[n - 1 - y];
    w.append(target - x, 'E');
    x = target;
    w.push_back('N');
  }
  w.append(m - x, 'E');
  return w;
}

Partition from_word(int n, const std::string& w) {
  std::vector<int> parts(n);
  int x = 0, y = 0;
  for (char c : w) {
    if (c == 'E') {
      ++x;
    } else {
      parts[n - 1 - y] = x;
      ++y;
    }
  }
  return Partition(parts);
}

BigInt column_multinomial(const DyckPath& path) {
  BigInt den(1);
  long total = 0;
  for (int h : path.column_heights()) {
    den *= factorial(h);
    total += h;
  }
  return factorial(total) / den;
}

std::string transpose_word(std::string w) {
  std::reverse(w.begin(), w.end());
  for (char& c : w) c = c == 'N' ? 'E' : 'N';
  return w;
}

std::vector<Partition> horizontal_covers(int m, int n, const Partition& mu) {
  std::vector<int> bound(n + 1);
  for (int y = 0; y < n; ++y) bound[y] = static_cast<int>(static_cast<long>(m) * y / n);
  bound[n] = m;
  std::string w = to_word(m, n, mu);
  // horizontal distance to the boundary at each point of the path
  std::vector<int> horiz(w.size() + 1);
  int x = 0, y = 0;
  horiz[0] = bound[0];
  for (size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'E') ++x;
    else ++y;
    horiz[i + 1] = bound[y] - x;
  }
  std::vector<Partition> out;
  for (size_t i = 1; i < w.size(); ++i) {
    if (w[i - 1] != 'E' || w[i] != 'N') continue;
    size_t j = i + 1;
    while (horiz[j] != horiz[i]) ++j;
    std::string rotated = w.substr(0, i - 1) + w.substr(i, j - i) + 'E' + w.substr(j);
    out.push_back(from_word(n, rotated));
  }
  return out;
}

}  // namespace

Rotation default_rotation(int m, int n) { return m < n ? Rotation::vertical : Rotation::horizontal; }

std::vector<Partition> tamari_covers(int m, int n, const Partition& mu, std::optional<Rotation> rotation) {
  if (rotation.value_or(default_rotation(m, n)) == Rotation::horizontal) return horizontal_covers(m, n, mu);
  std::vector<Partition> out;
  Partition flipped = from_word(m, transpose_word(to_word(m, n, mu)));
  for (const auto& c : horizontal_covers(n, m, flipped)) out.push_back(from_word(n, transpose_word(to_word(n, m, c))));
  return out;
}

TamariPoset::TamariPoset(int m, int n, std::optional<Rotation> rotation)
    : m_(m), n_(n), rotation_(rotation.value_or(default_rotation(m, n))), elements_(dyck_paths(m, n)) {
  std::map<Partition, size_t> index;
  for (size_t i = 0; i < elements_.size(); ++i) index[elements_[i].mu] = i;
  covers_.resize(elements_.size());
  for (size_t i = 0; i < elements_.size(); ++i)
    for (const auto& c : tamari_covers(m, n, elements_[i].mu, rotation_)) covers_[i].push_back(index.at(c));

  // Covers strictly increase the area, so decreasing area is a reverse
  // topological order for the upward closure.
  std::vector<size_t> order(elements_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return elements_[a].area() > elements_[b].area(); });
  up_.assign(elements_.size(), std::vector<bool>(elements_.size(), false));
  for (size_t i : order) {
    up_[i][i] = true;
    for (size_t c : covers_[i]) {
      if (elements_[c].area() <= elements_[i].area()) throw std::logic_error("rotation did not raise the area");
      for (size_t k = 0; k < elements_.size(); ++k)
        if (up_[c][k]) up_[i][k] = true;
    }
  }
}

size_t TamariPoset::index_of(const Partition& mu) const {
  for (size_t i = 0; i < elements_.size(); ++i)
    if (elements_[i].mu == mu) return i;
  throw RectangularError(mu.to_string() + " is not an (m,n)-Dyck path");
}

size_t TamariPoset::edge_count() const {
  size_t total = 0;
  for (const auto& c : covers_) total += c.size();
  return total;
}

size_t TamariPoset::bottom() const { return index_of(staircase(m_, n_)); }
size_t TamariPoset::top() const { return index_of(Partition()); }

bool TamariPoset::is_lattice() const {
  size_t sz = elements_.size();
  for (size_t a = 0; a < sz; ++a)
    for (size_t b = a + 1; b < sz; ++b) {
      // the common upper bounds must have a least element
      std::vector<size_t> ub;
      for (size_t c = 0; c < sz; ++c)
        if (up_[a][c] && up_[b][c]) ub.push_back(c);
      bool found = false;
      for (size_t c : ub) {
        bool least = true;
        for (size_t d : ub) least = least && up_[c][d];
        found = found || least;
      }
      if (!found) return false;
    }
  return true;
}

BigInt TamariPoset::interval_count() const {
  BigInt total(0);
  for (const auto& row : up_) total += static_cast<unsigned long>(std::count(row.begin(), row.end(), true));
  return total;
}

BigInt TamariPoset::decorated_count() const {
  BigInt total(0);
  for (size_t b = 0; b < elements_.size(); ++b) {
    unsigned long below = 0;
    for (size_t a = 0; a < elements_.size(); ++a) below += up_[a][b] ? 1 : 0;
    total += column_multinomial(elements_[b]) * below;
  }
  return total;
}

SymFunc TamariPoset::interval_strip_sum() const {
  SymFunc out(Basis::s);
  for (size_t b = 0; b < elements_.size(); ++b) {
    long below = 0;
    for (size_t a = 0; a < elements_.size(); ++a) below += up_[a][b] ? 1 : 0;
    const Partition& mu = elements_[b].mu;
    std::vector<int> outer(n_);
    for (int i = 0; i < n_; ++i) outer[i] = mu[i] + 1;
    out += ParamRat(below) * skew_schur(SkewShape(Partition(outer), mu));
  }
  return out;
}

std::string TamariPoset::to_dot() const {
  auto label = [&](size_t i) { return elements_[i].label(); };
  std::string out = "digraph tamari_" + std::to_string(m_) + "_" + std::to_string(n_) + " {\n";
  for (size_t i = 0; i < elements_.size(); ++i) out += "  \"" + label(i) + "\";\n";
  for (size_t i = 0; i < elements_.size(); ++i)
    for (size_t c : covers_[i]) out += "  \"" + label(i) + "\" -> \"" + label(c) + "\";\n";
  return out + "}\n";
}

BigInt interval_count(int m, int n) { return TamariPoset(m, n).interval_count(); }
BigInt decorated_count(int m, int n) { return TamariPoset(m, n).decorated_count(); }
SymFunc interval_strip_sum(int m, int n) { return TamariPoset(m, n).interval_strip_sum(); }

SymFunc interval_strip_closed_form(int m, int n) {
  if (n < 1) throw RectangularError("n must be positive");
  bool plus = (m - 1) % n == 0 && m > 1;
  bool minus = (m + 1) % n == 0;
  if (!plus && !minus) throw RectangularError("closed form needs m = rn+1 or m = rn-1");
  int r = plus ? (m - 1) / n : (m + 1) / n;
  long base = plus ? static_cast<long>(r) * n + 1 : static_cast<long>(r + 1) * n - 1;
  SymFunc out(Basis::p);
  for (const auto& lam : enumerate_partitions(n)) {
    int l = lam.length();
    BigRational c(1);
    if (l >= 2) {
      for (int i = 0; i < l - 2; ++i) c *= base;
    } else {
      c /= base;
    }
    for (int k : lam.parts()) c *= BigRational(plus ? binomial(static_cast<long>(r + 1) * k, k)
                                                   : binomial(static_cast<long>(r + 1) * k - 1, k));
    c /= BigRational(lam.z());
    if ((n - l) % 2) c = -c;
    out.add_term(lam, ParamRat(c));
  }
  return convert(out, Basis::s);
}

}  // namespace qtsym
