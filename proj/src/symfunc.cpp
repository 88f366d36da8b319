#include "qtsym/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

namespace qtsym {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::f: return "f";
    case Basis::pi: return "pi";
  }
  return "?";
}

std::optional<Basis> basis_from_name(std::string_view name) {
  static const std::pair<std::string_view, Basis> table[] = {{"m", Basis::m}, {"e", Basis::e}, {"h", Basis::h},
                                                             {"p", Basis::p}, {"s", Basis::s}, {"f", Basis::f},
                                                             {"pi", Basis::pi}};
  for (const auto& [n, b] : table)
    if (n == name) return b;
  return std::nullopt;
}

namespace {

using PTerms = SymFunc::Terms;

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.rbegin(), parts.rend());
  return Partition(parts);
}

void accumulate(PTerms& into, const Partition& mu, const ParamRat& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = into.try_emplace(mu, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  }
}

PTerms multiply_terms(const PTerms& a, const PTerms& b) {
  PTerms out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) accumulate(out, merge(la, lb), ca * cb);
  return out;
}

BigInt sign_of(const Partition& rho) { return (rho.size() - rho.length()) % 2 == 0 ? 1 : -1; }

// Murnaghan-Nakayama on beta-sets: strip a rim hook of length k by moving a
// bead from b to b-k; the sign counts the beads jumped over.
BigInt mn_character(const std::vector<int>& beads, const std::vector<int>& rho, size_t i,
                    std::map<std::pair<std::vector<int>, size_t>, BigInt>& memo) {
  if (i == rho.size()) return 1;
  auto key = std::make_pair(beads, i);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int k = rho[i];
  BigInt total = 0;
  for (size_t j = 0; j < beads.size(); ++j) {
    int b = beads[j], target = b - k;
    if (target < 0 || std::binary_search(beads.begin(), beads.end(), target)) continue;
    int between = 0;
    for (int x : beads)
      if (x > target && x < b) ++between;
    std::vector<int> next = beads;
    next[j] = target;
    std::sort(next.begin(), next.end());
    BigInt sub = mn_character(next, rho, i + 1, memo);
    if (between % 2) total -= sub;
    else total += sub;
  }
  memo.emplace(std::move(key), total);
  return total;
}

std::vector<int> beads_of(const Partition& lambda) {
  int l = lambda.length();
  std::vector<int> beads(l);
  for (int i = 0; i < l; ++i) beads[i] = lambda[i] + (l - 1 - i);
  std::sort(beads.begin(), beads.end());
  return beads;
}

// Number of maps from the parts of rho onto the parts of mu with matching
// sums: the coefficient of m_mu in p_rho.
BigInt merge_count(const std::vector<int>& rho, size_t i, std::vector<int>& room) {
  if (i == rho.size()) {
    for (int r : room)
      if (r) return 0;
    return 1;
  }
  BigInt total = 0;
  for (size_t j = 0; j < room.size(); ++j)
    if (room[j] >= rho[i]) {
      room[j] -= rho[i];
      total += merge_count(rho, i + 1, room);
      room[j] += rho[i];
    }
  return total;
}

struct DegreeIndex {
  std::vector<Partition> parts;
  std::map<Partition, size_t> index;
};

std::shared_mutex cache_mutex;
std::map<int, DegreeIndex> index_cache;
std::map<std::pair<int, Basis>, std::pair<Matrix, Matrix>> matrix_cache;

const DegreeIndex& degree_index(int n) {
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = index_cache.find(n); it != index_cache.end()) return it->second;
  }
  DegreeIndex d;
  d.parts = enumerate_partitions(n);
  for (size_t i = 0; i < d.parts.size(); ++i) d.index[d.parts[i]] = i;
  std::unique_lock lock(cache_mutex);
  return index_cache.try_emplace(n, std::move(d)).first->second;
}

PTerms generator_in_p(Basis b, int k);

Matrix product_rows(int n, Basis b) {
  const auto& idx = degree_index(n);
  Matrix a = zero_matrix(idx.parts.size(), idx.parts.size());
  for (size_t i = 0; i < idx.parts.size(); ++i) {
    PTerms acc{{Partition(), ParamRat(1)}};
    for (int k : idx.parts[i].parts()) acc = multiply_terms(acc, generator_in_p(b, k));
    for (const auto& [rho, c] : acc) a[i][idx.index.at(rho)] = c;
  }
  return a;
}

std::pair<Matrix, Matrix> build(int n, Basis b) {
  const auto& idx = degree_index(n);
  size_t sz = idx.parts.size();
  Matrix to = zero_matrix(sz, sz), from = zero_matrix(sz, sz);
  switch (b) {
    case Basis::p:
      to = from = identity_matrix(sz);
      break;
    case Basis::s:
      for (size_t r = 0; r < sz; ++r) {
        const Partition& rho = idx.parts[r];
        std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;
        BigRational z(rho.z());
        for (size_t l = 0; l < sz; ++l) {
          BigInt chi = mn_character(beads_of(idx.parts[l]), rho.parts(), 0, memo);
          from[r][l] = ParamRat(chi);
          to[l][r] = ParamRat(BigRational(chi) / z);
        }
      }
      break;
    case Basis::h:
    case Basis::e:
    case Basis::pi:
      to = product_rows(n, b);
      from = inverse(to);
      break;
    case Basis::m:
    case Basis::f:
      for (size_t r = 0; r < sz; ++r)
        for (size_t l = 0; l < sz; ++l) {
          std::vector<int> room = idx.parts[l].parts();
          BigInt c = merge_count(idx.parts[r].parts(), 0, room);
          if (b == Basis::f) c *= sign_of(idx.parts[r]);
          from[r][l] = ParamRat(c);
        }
      to = inverse(from);
      break;
  }
  return {std::move(to), std::move(from)};
}

const std::pair<Matrix, Matrix>& matrices(int n, Basis b) {
  auto key = std::make_pair(n, b);
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = matrix_cache.find(key); it != matrix_cache.end()) return it->second;
  }
  auto built = build(n, b);
  std::unique_lock lock(cache_mutex);
  return matrix_cache.try_emplace(key, std::move(built)).first->second;
}

PTerms generator_in_p(Basis b, int k) {
  PTerms out;
  switch (b) {
    case Basis::h:
    case Basis::e:
      for (const auto& rho : enumerate_partitions(k)) {
        BigRational c(BigInt(1), rho.z());
        if (b == Basis::e) c *= sign_of(rho);
        out.emplace(rho, ParamRat(c));
      }
      break;
    case Basis::pi: {
      // pi_k = sum_j (-1/qt)^(j-1) s_(j,1^(k-j))
      ParamRat ratio = ParamRat(-1) / (ParamRat::q() * ParamRat::t()), w(1);
      const auto& idx = degree_index(k);
      const Matrix& to_s = matrices(k, Basis::s).first;
      for (int j = 1; j <= k; ++j, w *= ratio) {
        std::vector<int> hook{j};
        hook.insert(hook.end(), k - j, 1);
        const Vector& row = to_s[idx.index.at(Partition(hook))];
        for (size_t c = 0; c < row.size(); ++c) accumulate(out, idx.parts[c], w * row[c]);
      }
      break;
    }
    default:
      throw std::logic_error("not a multiplicative basis");
  }
  return out;
}

bool multiplicative(Basis b) { return b == Basis::p || b == Basis::h || b == Basis::e || b == Basis::pi; }

PTerms to_p_terms(const SymFunc& f) {
  if (f.basis() == Basis::p) return f.terms();
  std::map<int, Vector> by_degree;
  for (const auto& [mu, c] : f.terms()) {
    int n = mu.size();
    const auto& row = matrices(n, f.basis()).first[degree_index(n).index.at(mu)];
    auto [it, fresh] = by_degree.try_emplace(n, Vector(row.size()));
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) it->second[j] += c * row[j];
  }
  PTerms out;
  for (const auto& [n, v] : by_degree) {
    const auto& idx = degree_index(n);
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out.emplace(idx.parts[j], v[j]);
  }
  return out;
}

SymFunc from_p_terms(const PTerms& terms, Basis target) {
  SymFunc out(target);
  if (target == Basis::p) {
    for (const auto& [mu, c] : terms) out.add_term(mu, c);
    return out;
  }
  std::map<int, Vector> by_degree;
  for (const auto& [rho, c] : terms) {
    int n = rho.size();
    const auto& row = matrices(n, target).second[degree_index(n).index.at(rho)];
    auto [it, fresh] = by_degree.try_emplace(n, Vector(row.size()));
    for (size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero()) it->second[j] += c * row[j];
  }
  for (const auto& [n, v] : by_degree) {
    const auto& idx = degree_index(n);
    for (size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) out.add_term(idx.parts[j], v[j]);
  }
  return out;
}

std::string coefficient_prefix(const ParamRat& c, bool first) {
  if (c.is_constant() && c.constant_value().get_den() == 1) {
    BigInt v = c.constant_value().get_num();
    std::string sign = v < 0 ? "-" : (first ? "" : "+");
    BigInt a = abs(v);
    return sign + (a == 1 ? std::string() : a.get_str() + "*");
  }
  return (first ? "(" : "+(") + c.to_string() + ")*";
}

}  // namespace

SymFunc::SymFunc(Basis b, const Partition& mu, const ParamRat& c) : basis_(b) { add_term(mu, c); }

ParamRat SymFunc::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? ParamRat() : it->second;
}

void SymFunc::add_term(const Partition& mu, const ParamRat& c) { accumulate(terms_, mu, c); }

bool SymFunc::is_homogeneous() const { return degrees().size() <= 1; }

int SymFunc::max_degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.size(); }

std::vector<int> SymFunc::degrees() const {
  std::vector<int> d;
  for (const auto& [mu, c] : terms_)
    if (d.empty() || d.back() != mu.size()) d.push_back(mu.size());
  return d;
}

SymFunc SymFunc::homogeneous_part(int d) const {
  SymFunc out(basis_);
  for (const auto& [mu, c] : terms_)
    if (mu.size() == d) out.terms_.emplace(mu, c);
  return out;
}

SymFunc SymFunc::map_coefficients(const std::function<ParamRat(const ParamRat&)>& fn) const {
  SymFunc out(basis_);
  for (const auto& [mu, c] : terms_) out.add_term(mu, fn(c));
  return out;
}

std::string SymFunc::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  std::string name = basis_name(basis_);
  for (const auto& [mu, c] : terms_) {
    out += coefficient_prefix(c, out.empty());
    out += name + "[";
    for (size_t i = 0; i < mu.parts().size(); ++i) {
      if (i) out += ",";
      out += std::to_string(mu.parts()[i]);
    }
    out += "]";
  }
  return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& g) {
  if (g.basis_ != basis_) return *this += convert(g, basis_);
  for (const auto& [mu, c] : g.terms_) add_term(mu, c);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& g) {
  if (g.basis_ != basis_) return *this -= convert(g, basis_);
  for (const auto& [mu, c] : g.terms_) add_term(mu, -c);
  return *this;
}

SymFunc& SymFunc::operator*=(const ParamRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [mu, v] : terms_) v *= c;
  return *this;
}

SymFunc operator*(const SymFunc& f, const SymFunc& g) {
  if (f.basis() == g.basis() && multiplicative(f.basis())) {
    SymFunc out(f.basis());
    for (const auto& [mu, c] : multiply_terms(f.terms(), g.terms())) out.add_term(mu, c);
    return out;
  }
  return from_p_terms(multiply_terms(to_p_terms(f), to_p_terms(g)), f.basis());
}

bool operator==(const SymFunc& f, const SymFunc& g) {
  if (f.basis() == g.basis()) return f.terms() == g.terms();
  return to_p_terms(f) == to_p_terms(g);
}

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  return from_p_terms(to_p_terms(f), target);
}

SymFunc pow(const SymFunc& f, int k) {
  SymFunc r = SymFunc::scalar(1, f.basis());
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

const Matrix& to_power_sum_matrix(int degree, Basis b) { return matrices(degree, b).first; }
const Matrix& from_power_sum_matrix(int degree, Basis b) { return matrices(degree, b).second; }

BigInt character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw ShapeError("character needs partitions of equal size");
  std::map<std::pair<std::vector<int>, size_t>, BigInt> memo;
  return mn_character(beads_of(lambda), rho.parts(), 0, memo);
}

ParamRat hall(const SymFunc& f, const SymFunc& g) {
  PTerms a = to_p_terms(f), b = to_p_terms(g);
  ParamRat r;
  for (const auto& [rho, c] : a)
    if (auto it = b.find(rho); it != b.end()) r += c * it->second * ParamRat(rho.z());
  return r;
}

SymFunc omega(const SymFunc& f) {
  PTerms a = to_p_terms(f);
  for (auto& [rho, c] : a)
    if (sign_of(rho) < 0) c = -c;
  return from_p_terms(a, f.basis());
}

SymFunc skew(const SymFunc& f, const SymFunc& g) {
  PTerms a = to_p_terms(f), b = to_p_terms(g), out;
  for (const auto& [rho, c] : a) {
    auto mr = rho.multiplicities();
    for (const auto& [sigma, d] : b) {
      auto ms = sigma.multiplicities();
      if (ms.size() < mr.size()) continue;
      BigInt factor = 1;
      std::vector<int> rest;
      bool fits = true;
      for (size_t k = 1; k < ms.size(); ++k) {
        int need = k < mr.size() ? mr[k] : 0;
        if (need > ms[k]) {
          fits = false;
          break;
        }
        for (int i = 0; i < need; ++i) factor *= BigInt(static_cast<long>(k)) * BigInt(ms[k] - i);
        rest.insert(rest.end(), ms[k] - need, static_cast<int>(k));
      }
      if (!fits) continue;
      std::sort(rest.rbegin(), rest.rend());
      accumulate(out, Partition(rest), c * d * ParamRat(factor));
    }
  }
  return from_p_terms(out, g.basis());
}

SymFunc kronecker(const SymFunc& f, const SymFunc& g) {
  PTerms a = to_p_terms(f), b = to_p_terms(g), out;
  for (const auto& [rho, c] : a)
    if (auto it = b.find(rho); it != b.end()) accumulate(out, rho, c * it->second * ParamRat(rho.z()));
  return from_p_terms(out, f.basis());
}

SymFunc jacobi_trudi(const Partition& mu, bool dual) {
  Partition lam = dual ? mu.conjugate() : mu;
  Basis b = dual ? Basis::e : Basis::h;
  int l = lam.length();
  SymFunc out(b);
  std::vector<int> perm(l);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> parts;
    bool zero = false;
    for (int i = 0; i < l && !zero; ++i) {
      int k = lam[i] + perm[i] - i;
      if (k < 0) zero = true;
      else if (k > 0) parts.push_back(k);
    }
    if (zero) continue;
    int inversions = 0;
    for (int i = 0; i < l; ++i)
      for (int j = i + 1; j < l; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::sort(parts.rbegin(), parts.rend());
    out.add_term(Partition(parts), ParamRat(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

void horizontal_strips(const std::vector<int>& lam, size_t row, int left, std::vector<int>& cur,
                       std::vector<Partition>& out) {
  if (row == lam.size() + 1) {
    if (left == 0) out.emplace_back(cur);
    return;
  }
  int base = row < lam.size() ? lam[row] : 0;
  int cap = row == 0 ? base + left : std::min(base + left, lam[row - 1]);
  for (int v = base; v <= cap; ++v) {
    cur.push_back(v);
    horizontal_strips(lam, row + 1, left - (v - base), cur, out);
    cur.pop_back();
  }
}

}  // namespace

SymFunc pieri_h(int k, const SymFunc& f) {
  if (f.basis() != Basis::s) return pieri_h(k, convert(f, Basis::s));
  SymFunc out(Basis::s);
  if (k < 0) return out;
  for (const auto& [lam, c] : f.terms()) {
    std::vector<Partition> grown;
    std::vector<int> cur;
    horizontal_strips(lam.parts(), 0, k, cur, grown);
    for (const auto& nu : grown) out.add_term(nu, c);
  }
  return out;
}

SymFunc h_to_s(const SymFunc& f) {
  if (f.basis() != Basis::h) return convert(f, Basis::s);
  SymFunc out(Basis::s);
  for (const auto& [mu, c] : f.terms()) {
    SymFunc acc = SymFunc::scalar(c);
    for (auto it = mu.parts().rbegin(); it != mu.parts().rend(); ++it) acc = pieri_h(*it, acc);
    out += acc;
  }
  return out;
}

SymFunc schur_product(const Partition& lam, const Partition& mu) {
  SymFunc out(Basis::s), jt = jacobi_trudi(mu);
  for (const auto& [nu, c] : jt.terms()) {
    SymFunc acc(Basis::s, lam, c);
    for (int k : nu.parts()) acc = pieri_h(k, acc);
    out += acc;
  }
  return out;
}

SymFunc skew_schur(const SkewShape& shape) { return skew(s(shape.inner), s(shape.outer)); }

SymFunc pi_n(int n) {
  if (n < 1) throw std::invalid_argument("pi_n needs n >= 1");
  return convert(SymFunc(Basis::pi, Partition{n}), Basis::s);
}

SymFunc expand_in_pi(const SymFunc& f) { return convert(f, Basis::pi); }

bool is_nonnegative_polynomial(const ParamRat& c) {
  if (!c.is_integer_polynomial()) return false;
  for (const auto& [key, v] : c.num().terms())
    if (v < 0) return false;
  return true;
}

PositivityReport is_schur_positive(const SymFunc& f) {
  PositivityReport r;
  SymFunc in_s = convert(f, Basis::s);
  for (const auto& [mu, c] : in_s.terms())
    if (!is_nonnegative_polynomial(c)) {
      r.positive = false;
      r.witness = std::make_pair(mu, c);
      break;
    }
  return r;
}

}  // namespace qtsym
