#include "qtsym/rectangular.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

namespace qtsym {

namespace {

void require_positive(int m, int n) {
  if (m < 1 || n < 1) throw RectangularError("m and n must be positive");
}

BigInt multinomial(const std::vector<int>& parts) {
  long total = 0;
  BigInt den(1);
  for (int k : parts) {
    total += k;
    den *= factorial(k);
  }
  return factorial(total) / den;
}

BigInt as_integer(const BigRational& r, const char* what) {
  if (r.get_den() != 1) throw RectangularError(std::string(what) + ": non-integer value " + r.get_str());
  return r.get_num();
}

}  // namespace

std::vector<int> staircase_rows(int m, int n) {
  require_positive(m, n);
  std::vector<int> rows(n);
  for (int k = 1; k <= n; ++k) rows[k - 1] = static_cast<int>((static_cast<long>(m) * (n - k)) / n);
  return rows;
}

Partition staircase(int m, int n) { return Partition(staircase_rows(m, n)); }

int DyckPath::area() const { return staircase(m, n).size() - mu.size(); }

std::vector<int> DyckPath::column_heights() const {
  std::vector<int> heights;
  int y = n - 1;
  while (y >= 0) {
    int v = mu[y];
    int h = 0;
    while (y >= 0 && mu[y] == v) {
      ++h;
      --y;
    }
    heights.push_back(h);
  }
  return heights;
}

std::string DyckPath::label() const {
  std::string out;
  for (int y = 0; y < n; ++y) {
    if (y > 0 && mu[0] > 9) out += ',';
    out += std::to_string(mu[y]);
  }
  return out;
}

DyckPath make_dyck_path(int m, int n, const Partition& mu) {
  if (!staircase(m, n).contains(mu) || mu.length() > n)
    throw RectangularError("partition " + mu.to_string() + " is not inside the staircase");
  return DyckPath{m, n, mu};
}

std::vector<DyckPath> dyck_paths(int m, int n) {
  std::vector<DyckPath> out;
  for (const auto& mu : subpartitions(staircase(m, n))) out.push_back(DyckPath{m, n, mu});
  return out;
}

ParamRat cat_q(int m, int n) {
  int top = staircase(m, n).size();
  std::vector<BigInt> count(top + 1);
  for (const auto& path : dyck_paths(m, n)) count[path.area()] += 1;
  std::vector<Poly::Term> terms;
  for (int a = 0; a <= top; ++a)
    if (count[a] != 0) terms.emplace_back(mono::pack({a, 0, 0}), count[a]);
  return ParamRat(Poly::from_terms(std::move(terms)));
}

// Variables z_0..z_{m+1}. The Omega factor contributes only its degree-n part
// (z_mn has degree n and the q-factors have degree 0). The factor with
// z_{i+1}/z_i is the last one touching z_i, so after multiplying by it every
// monomial with a nonzero z_i exponent is dropped.
ParamRat cat_q_constant_term(int m, int n) {
  std::vector<int> rows = staircase_rows(m, n);
  int bound = n;
  for (int r : rows) bound += r;
  size_t nv = static_cast<size_t>(m) + 2;

  std::map<std::vector<int>, Poly> series;
  std::vector<int> expo(nv, 0);
  // multisets of size n over {0..m}
  std::function<void(int, int)> fill = [&](int var, int left) {
    if (var == m) {
      expo[var] = left;
      std::vector<int> e = expo;
      for (int r : rows) --e[r];
      series[e] = series[e] + Poly(1);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      expo[var] = k;
      fill(var + 1, left - k);
    }
    expo[var] = 0;
  };
  fill(0, n);

  for (int i = 0; i <= m; ++i) {
    std::map<std::vector<int>, Poly> next;
    for (const auto& [e, c] : series) {
      for (int k = 0; k <= bound; ++k) {
        if (e[i] - k != 0) continue;
        std::vector<int> f = e;
        f[i] -= k;
        f[i + 1] += k;
        next[f] = next[f] + c * Poly::var(Param::q, k);
      }
    }
    series = std::move(next);
  }
  auto it = series.find(std::vector<int>(nv, 0));
  return it == series.end() ? ParamRat(0) : ParamRat(it->second);
}

BigInt bizley_cat(int m, int n) {
  require_positive(m, n);
  int d = std::gcd(m, n), a = m / d, b = n / d;
  BigRational total(0);
  for (const auto& mu : enumerate_partitions(d)) {
    BigRational term = BigRational(1) / BigRational(mu.z());
    for (int k : mu.parts()) term *= BigRational(binomial(static_cast<long>(a + b) * k, static_cast<long>(a) * k)) / (a + b);
    total += term;
  }
  return as_integer(total, "bizley_cat");
}

BigInt bizley_park(int m, int n) {
  require_positive(m, n);
  int d = std::gcd(m, n), a = m / d, b = n / d;
  BigRational total(0);
  for (const auto& mu : enumerate_partitions(d)) {
    std::vector<int> sizes;
    BigRational term = BigRational(1) / BigRational(mu.z());
    for (int k : mu.parts()) {
      sizes.push_back(k * b);
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), BigInt(k * a).get_mpz_t(), static_cast<unsigned long>(k * b));
      term *= BigRational(power) / a;
    }
    term *= BigRational(multinomial(sizes));
    total += term;
  }
  return as_integer(total, "bizley_park");
}

std::vector<int> ParkingFunction::word() const {
  std::vector<int> w(labels.size());
  for (size_t y = 0; y < labels.size(); ++y) w[labels[y] - 1] = path.mu[y];
  return w;
}

std::string ParkingFunction::to_string() const {
  std::vector<int> w = word();
  bool wide = false;
  for (int v : w) wide = wide || v > 9;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (wide && i > 0) out += ',';
    out += std::to_string(w[i]);
  }
  std::string shape = path.mu.empty() ? "0" : path.mu.to_string();
  return out + " on " + shape;
}

std::vector<ParkingFunction> parking_enumerate(const DyckPath& path) {
  int n = path.n;
  // rows grouped by column, bottom-up within each column
  std::vector<std::vector<int>> columns;
  for (int y = 0; y < n; ++y) {
    if (y == 0 || path.mu[y] != path.mu[y - 1]) columns.emplace_back();
    columns.back().push_back(y);
  }
  std::vector<ParkingFunction> out;
  std::vector<int> labels(n, 0);
  std::vector<bool> used(n + 1, false);
  // assign an increasing label set to each column in turn
  std::function<void(size_t, size_t, int)> go = [&](size_t col, size_t pos, int min_label) {
    if (col == columns.size()) {
      out.push_back(ParkingFunction{path, labels});
      return;
    }
    if (pos == columns[col].size()) {
      go(col + 1, 0, 1);
      return;
    }
    int remaining = static_cast<int>(columns[col].size() - pos);
    for (int l = min_label; l <= n - remaining + 1; ++l) {
      if (used[l]) continue;
      used[l] = true;
      labels[columns[col][pos]] = l;
      go(col, pos + 1, l + 1);
      used[l] = false;
    }
  };
  go(0, 0, 1);
  return out;
}

BigInt parking_count(int m, int n) {
  BigInt total(0);
  for (const auto& path : dyck_paths(m, n)) total += multinomial(path.column_heights());
  return total;
}

long rank(int m, int n, int x, int y) {
  return static_cast<long>(m) * n - static_cast<long>(n) * x - static_cast<long>(m) * y;
}

std::vector<Split> all_splits(int m, int n) {
  if (m < 0 || n < 0 || (m == 0 && n == 0)) throw RectangularError("split needs a nonzero nonnegative pair");
  int d = std::gcd(m, n);
  std::vector<Split> out;
  for (int r = 0; r <= m; ++r) {
    for (int s = 0; s <= n; ++s) {
      int u = m - r, v = n - s;
      if ((r == 0 && s == 0) || (u == 0 && v == 0)) continue;
      if (static_cast<long>(s) * u - static_cast<long>(r) * v == d) out.push_back(Split{{r, s}, {u, v}});
    }
  }
  return out;
}

Split split(int m, int n) {
  auto splits = all_splits(m, n);
  if (splits.empty())
    throw RectangularError("no split of (" + std::to_string(m) + "," + std::to_string(n) + ")");
  return splits.front();
}

// ---- operators ----

struct EhaOperator::Node {
  enum class Kind { p1, d0, pi, bracket } kind;
  int m = 0;
  int n = 0;
  int k = 0;  // for pi
  int brackets = 0;
  std::string text;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

using NodePtr = std::shared_ptr<const EhaOperator::Node>;

std::shared_mutex op_mutex;
std::map<std::pair<std::string, int>, Matrix> op_matrix_cache;

const std::vector<Partition>& parts_of(int d) {
  static std::shared_mutex mu;
  static std::map<int, std::vector<Partition>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lock(mu);
  return cache.try_emplace(d, enumerate_partitions(d)).first->second;
}

Matrix p1_matrix(int d) {
  const auto& rows = parts_of(d);
  const auto& cols = parts_of(d + 1);
  Matrix a = zero_matrix(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      if (cols[j].contains(rows[i])) a[i][j] = ParamRat(1);
  return a;
}

Matrix multiplication_matrix(const SymFunc& f, int fdeg, int d) {
  const auto& rows = parts_of(d);
  const auto& cols = parts_of(d + fdeg);
  Matrix a = zero_matrix(rows.size(), cols.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    SymFunc prod = convert(s(rows[i]) * f, Basis::s);
    for (size_t j = 0; j < cols.size(); ++j) a[i][j] = prod.coefficient(cols[j]);
  }
  return a;
}

Matrix node_matrix(const NodePtr& node, int d);

const Matrix& cached_node_matrix(const NodePtr& node, int d) {
  std::pair<std::string, int> key{node->text, d};
  {
    std::shared_lock lock(op_mutex);
    auto it = op_matrix_cache.find(key);
    if (it != op_matrix_cache.end()) return it->second;
  }
  Matrix a = node_matrix(node, d);
  std::unique_lock lock(op_mutex);
  return op_matrix_cache.try_emplace(key, std::move(a)).first->second;
}

Matrix node_matrix(const NodePtr& node, int d) {
  using Kind = EhaOperator::Node::Kind;
  switch (node->kind) {
    case Kind::p1:
      return p1_matrix(d);
    case Kind::pi:
      return multiplication_matrix(pi_n(node->k), node->k, d);
    case Kind::d0:
      return d == 0 ? identity_matrix(1) : eigen_matrix_D0(d);
    case Kind::bracket: break;
  }
  const NodePtr& a = node->left;
  const NodePtr& b = node->right;
  Matrix ab = multiply(cached_node_matrix(b, d), cached_node_matrix(a, d + b->n));
  Matrix ba = multiply(cached_node_matrix(a, d), cached_node_matrix(b, d + a->n));
  ParamRat inv = ParamRat(1) / M();
  for (size_t i = 0; i < ab.size(); ++i)
    for (size_t j = 0; j < ab[i].size(); ++j) ab[i][j] = (ab[i][j] - ba[i][j]) * inv;
  return ab;
}

NodePtr leaf(EhaOperator::Node::Kind kind, int m, int n, int k, std::string text) {
  auto node = std::make_shared<EhaOperator::Node>();
  node->kind = kind;
  node->m = m;
  node->n = n;
  node->k = k;
  node->text = std::move(text);
  return node;
}

}  // namespace

int EhaOperator::m() const { return node_->m; }
int EhaOperator::n() const { return node_->n; }
int EhaOperator::m_power() const { return node_->brackets; }
std::string EhaOperator::bracket() const { return node_->text; }

std::string EhaOperator::word() const {
  if (node_->brackets == 0) return node_->text;
  std::string scale = node_->brackets == 1 ? "(1/M)" : "(1/M^" + std::to_string(node_->brackets) + ")";
  return scale + node_->text;
}

const Matrix& EhaOperator::matrix(int d) const { return cached_node_matrix(node_, d); }

EhaOperator EhaOperator::generator_p1() { return EhaOperator(leaf(Node::Kind::p1, 0, 1, 1, "p1")); }
EhaOperator EhaOperator::generator_D0() { return EhaOperator(leaf(Node::Kind::d0, 1, 0, 0, "D0")); }

EhaOperator EhaOperator::pi_multiplication(int k) {
  if (k < 1) throw RectangularError("pi_k needs k >= 1");
  if (k == 1) return generator_p1();
  return EhaOperator(leaf(Node::Kind::pi, 0, k, k, "pi" + std::to_string(k)));
}

EhaOperator EhaOperator::commutator(const EhaOperator& a, const EhaOperator& b) {
  auto node = std::make_shared<Node>();
  node->kind = Node::Kind::bracket;
  node->m = a.m() + b.m();
  node->n = a.n() + b.n();
  node->brackets = a.m_power() + b.m_power() + 1;
  node->text = "[" + a.bracket() + "," + b.bracket() + "]";
  node->left = a.node_;
  node->right = b.node_;
  return EhaOperator(node);
}

EhaOperator q_operator(int m, int n) {
  if (m < 0 || n < 0 || (m == 0 && n == 0)) throw RectangularError("Q_{mn} needs a nonzero nonnegative pair");
  if (m == 0) return EhaOperator::pi_multiplication(n);
  if (m == 1 && n == 0) return EhaOperator::generator_D0();
  if (n == 0) throw RectangularError("Q_{m0} is only defined for m = 1");
  return q_operator(m, n, split(m, n));
}

EhaOperator q_operator(int m, int n, const Split& top) {
  if (top.first.first + top.second.first != m || top.first.second + top.second.second != n)
    throw RectangularError("split does not add up to (m,n)");
  return EhaOperator::commutator(q_operator(top.first.first, top.first.second),
                                 q_operator(top.second.first, top.second.second));
}

SymFunc apply(const EhaOperator& op, const SymFunc& g) {
  SymFunc out(Basis::s);
  SymFunc gs = convert(g, Basis::s);
  for (int d : gs.degrees()) {
    const auto& rows = parts_of(d);
    const auto& cols = parts_of(d + op.n());
    Vector v(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) v[i] = gs.coefficient(rows[i]);
    Vector w = row_times(v, op.matrix(d));
    for (size_t j = 0; j < cols.size(); ++j)
      if (!w[j].is_zero()) out.add_term(cols[j], w[j]);
  }
  return out;
}

SymFunc apply_q_product(int a, int b, const Partition& mu, const SymFunc& g) {
  SymFunc out = g;
  for (int i = mu.length() - 1; i >= 0; --i) out = apply(q_operator(a * mu[i], b * mu[i]), out);
  return out;
}

SymFunc pi_mn(int m, int n) { return apply(q_operator(m, n), SymFunc::scalar(1)); }

SymFunc seed_family(const SymFunc& g, int a, int b) {
  if (a < 0 || b < 0 || std::gcd(a, b) != 1) throw RectangularError("seed direction must be a coprime pair");
  if (!g.is_homogeneous()) throw RectangularError("seed must be homogeneous");
  SymFunc coeffs = expand_in_pi(g);
  SymFunc out(Basis::s);
  for (const auto& [mu, c] : coeffs.terms()) out += c * apply_q_product(a, b, mu, SymFunc::scalar(1));
  return out;
}

SymFunc strip_schur_sum(int m, int n, StripVariant variant) {
  require_positive(m, n);
  if (variant == StripVariant::direct) {
    SymFunc out(Basis::s);
    for (const auto& path : dyck_paths(m, n)) {
      std::vector<int> outer(n);
      for (int i = 0; i < n; ++i) outer[i] = path.mu[i] + 1;
      out += skew_schur(SkewShape(Partition(outer), path.mu));
    }
    return out;
  }
  int d = std::gcd(m, n), a = m / d, b = n / d;
  SymFunc out(Basis::p);
  for (const auto& mu : enumerate_partitions(d)) {
    SymFunc term = SymFunc::scalar(ParamRat(BigRational(1) / BigRational(mu.z())), Basis::p);
    for (int k : mu.parts()) {
      SymFunc factor = plethysm(e(Partition{k * b}), scaled_alphabet(ParamRat(k * a)));
      term = term * factor * ParamRat(BigRational(1) / a);
    }
    out += term;
  }
  return convert(out, Basis::s);
}

SymFunc strip_schur_sum_q(int m, int n) {
  require_positive(m, n);
  SymFunc out(Basis::s);
  for (const auto& path : dyck_paths(m, n)) {
    std::vector<int> outer(n);
    for (int i = 0; i < n; ++i) outer[i] = path.mu[i] + 1;
    out += ParamRat::q(path.area()) * skew_schur(SkewShape(Partition(outer), path.mu));
  }
  return out;
}

SymFunc mold_44(const ParamRat& alphabet) {
  using Row = std::pair<Partition, std::vector<Partition>>;
  static const std::vector<Row> rows = {
      {Partition{4}, {Partition()}},
      {Partition{3, 1}, {Partition{1}, Partition{2}, Partition{3}}},
      {Partition{2, 2}, {Partition{2}, Partition{4}, Partition{2, 1}}},
      {Partition{2, 1, 1},
       {Partition{3}, Partition{4}, Partition{5}, Partition{1, 1}, Partition{2, 1}, Partition{3, 1}}},
      {Partition{1, 1, 1, 1}, {Partition{6}, Partition{4, 1}, Partition{3, 1}, Partition{1, 1, 1}}},
  };
  SymFunc out(Basis::s);
  for (const auto& [mu, lambdas] : rows) {
    ParamRat c(0);
    for (const auto& lam : lambdas) c += eval_scalar(s(lam), alphabet);
    if (!c.is_zero()) out.add_term(mu, c);
  }
  return out;
}

}  // namespace qtsym
