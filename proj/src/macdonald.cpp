#include "qtsym/macdonald.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>

namespace qtsym {

namespace {

std::atomic<int> degree_limit{6};

std::shared_mutex cache_mutex;
std::map<int, MacdonaldDegree> degree_cache;
std::map<int, std::vector<SymFunc>> p_cache;
std::map<std::pair<int, int>, Matrix> operator_cache;

ParamRat power_product(const Partition& rho, const std::function<ParamRat(int)>& fn) {
  ParamRat r(1);
  for (int k : rho.parts()) r *= fn(k);
  return r;
}

Vector s_coordinates(const SymFunc& g, const std::vector<Partition>& parts) {
  SymFunc gs = convert(g, Basis::s);
  Vector v(parts.size());
  for (size_t i = 0; i < parts.size(); ++i) v[i] = gs.coefficient(parts[i]);
  return v;
}

SymFunc from_s_coordinates(const Vector& v, const std::vector<Partition>& parts) {
  SymFunc out(Basis::s);
  for (size_t i = 0; i < parts.size(); ++i)
    if (!v[i].is_zero()) out.add_term(parts[i], v[i]);
  return out;
}

// A[nu][lambda] = <s_lambda, s_nu[(1 - c) x]> for c = q or t.
Matrix scaled_schur_matrix(int n, const ParamRat& c) {
  const Matrix& to_p = to_power_sum_matrix(n, Basis::s);
  const Matrix& from_p = from_power_sum_matrix(n, Basis::s);
  std::vector<Partition> parts = enumerate_partitions(n);
  Matrix scaled = to_p;
  for (size_t r = 0; r < parts.size(); ++r) {
    ParamRat f = power_product(parts[r], [&](int k) { return 1 - adams(c, k); });
    for (auto& row : scaled) row[r] *= f;
  }
  return multiply(scaled, from_p);
}

SymFunc solve_H(const Partition& mu, const std::vector<Partition>& parts, const Matrix& aq, const Matrix& at) {
  size_t sz = parts.size();
  Matrix rows;
  Vector rhs;
  Partition mu_c = mu.conjugate();
  for (size_t l = 0; l < sz; ++l) {
    if (!dominates(parts[l], mu)) {
      Vector row(sz);
      for (size_t v = 0; v < sz; ++v) row[v] = aq[v][l];
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
    if (!dominates(parts[l], mu_c)) {
      Vector row(sz);
      for (size_t v = 0; v < sz; ++v) row[v] = at[v][l];
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
  }
  Vector unit(sz);
  unit[0] = 1;
  rows.push_back(unit);
  rhs.emplace_back(1);
  Vector c;
  try {
    c = solve_overdetermined(rows, rhs);
  } catch (const std::runtime_error& err) {
    throw MacdonaldError("H system for " + mu.to_string() + " in degree " + std::to_string(mu.size()) +
                         ": " + err.what());
  }
  for (size_t i = 0; i < sz; ++i)
    if (!c[i].is_integer_polynomial())
      throw MacdonaldError("non-polynomial q,t-Kostka coefficient for " + mu.to_string());
  return from_s_coordinates(c, parts);
}

MacdonaldDegree build_degree(int n) {
  MacdonaldDegree d;
  d.n = n;
  d.parts = enumerate_partitions(n);
  Matrix aq = scaled_schur_matrix(n, ParamRat::q());
  Matrix at = scaled_schur_matrix(n, ParamRat::t());
  for (const auto& mu : d.parts) d.h.push_back(s_coordinates(solve_H(mu, d.parts, aq, at), d.parts));
  d.h_inverse = inverse(d.h);
  return d;
}

std::vector<SymFunc> build_P(int n) {
  std::vector<Partition> parts = enumerate_partitions(n);
  std::reverse(parts.begin(), parts.end());  // increasing lexicographic order
  std::vector<SymFunc> done;
  std::vector<ParamRat> norms;
  for (const auto& mu : parts) {
    SymFunc mp = convert(m(mu), Basis::p);
    SymFunc pmu = mp;
    for (size_t i = 0; i < done.size(); ++i) pmu -= (qt_scalar(mp, done[i]) / norms[i]) * done[i];
    norms.push_back(qt_scalar(pmu, pmu));
    done.push_back(std::move(pmu));
  }
  std::vector<SymFunc> out;
  for (auto it = done.rbegin(); it != done.rend(); ++it) out.push_back(convert(*it, Basis::m));
  return out;  // indexed like enumerate_partitions(n)
}

const Matrix& cached_operator(int n, int which, const Eigenvalue& ev) {
  auto key = std::make_pair(n, which);
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = operator_cache.find(key); it != operator_cache.end()) return it->second;
  }
  const MacdonaldDegree& d = macdonald_degree(n);
  Matrix left = d.h_inverse;
  for (size_t j = 0; j < d.parts.size(); ++j) {
    ParamRat x = ev(d.parts[j]);
    for (auto& row : left) row[j] *= x;
  }
  Matrix op = multiply(left, d.h);
  std::unique_lock lock(cache_mutex);
  return operator_cache.try_emplace(key, std::move(op)).first->second;
}

SymFunc apply_matrix_by_degree(const SymFunc& g, const std::function<const Matrix&(int)>& matrix_of,
                               const ParamRat& degree0) {
  SymFunc out(Basis::s);
  for (int n : g.degrees()) {
    SymFunc part = g.homogeneous_part(n);
    if (n == 0) {
      out += degree0 * part;
      continue;
    }
    std::vector<Partition> parts = enumerate_partitions(n);
    out += from_s_coordinates(row_times(s_coordinates(part, parts), matrix_of(n)), parts);
  }
  return out;
}

// g = sum a_mu b_mu[x/(1-q)] with b = h or s, each term scaled by ev(mu).
SymFunc star_diagonal(const SymFunc& g, Basis b, const Eigenvalue& ev) {
  ParamRat q = ParamRat::q();
  SymFunc a = convert(plethysm(g, scaled_alphabet(1 - q)), b);
  SymFunc scaled(b);
  for (const auto& [mu, c] : a.terms()) scaled.add_term(mu, c * ev(mu));
  return convert(plethysm(scaled, scaled_alphabet(1 / (1 - q))), Basis::s);
}

}  // namespace

ParamRat M() { return (1 - ParamRat::q()) * (1 - ParamRat::t()); }

ParamRat B_mu(const Partition& mu) {
  ParamRat r;
  for (const auto& c : mu.cells()) r += ParamRat::q(c.x) * ParamRat::t(c.y);
  return r;
}

ParamRat T_mu(const Partition& mu) { return ParamRat::q(mu.conjugate().n()) * ParamRat::t(mu.n()); }

ParamRat Pi_mu(const Partition& mu) {
  ParamRat r(1);
  for (const auto& c : mu.cells())
    if (c.x != 0 || c.y != 0) r *= 1 - ParamRat::q(c.x) * ParamRat::t(c.y);
  return r;
}

ParamRat w_mu(const Partition& mu) {
  ParamRat r(1);
  for (const auto& c : cell_data(mu))
    r *= (ParamRat::q(c.arm) - ParamRat::t(c.leg + 1)) * (ParamRat::t(c.leg) - ParamRat::q(c.arm + 1));
  return r;
}

ParamRat qt_scalar(const SymFunc& f, const SymFunc& g) {
  SymFunc a = convert(f, Basis::p), b = convert(g, Basis::p);
  ParamRat q = ParamRat::q(), t = ParamRat::t();
  ParamRat r;
  for (const auto& [rho, c] : a.terms()) {
    ParamRat d = b.coefficient(rho);
    if (d.is_zero()) continue;
    r += c * d * ParamRat(rho.z()) * power_product(rho, [&](int k) { return (1 - q.pow(k)) / (1 - t.pow(k)); });
  }
  return r;
}

ParamRat star_scalar(const SymFunc& f, const SymFunc& g) {
  SymFunc a = convert(f, Basis::p), b = convert(g, Basis::p);
  ParamRat q = ParamRat::q(), t = ParamRat::t();
  ParamRat r;
  for (const auto& [rho, c] : a.terms()) {
    ParamRat d = b.coefficient(rho);
    if (d.is_zero()) continue;
    ParamRat z = ParamRat(rho.z()) * power_product(rho, [&](int k) { return (1 - q.pow(k)) * (1 - t.pow(k)); });
    if ((rho.size() - rho.length()) % 2 != 0) z = -z;
    r += c * d * z;
  }
  return r;
}

SymFunc macdonald_P(const Partition& mu) {
  int n = mu.size();
  const std::vector<SymFunc>* list = nullptr;
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = p_cache.find(n); it != p_cache.end()) list = &it->second;
  }
  if (!list) {
    auto built = build_P(n);
    std::unique_lock lock(cache_mutex);
    list = &p_cache.try_emplace(n, std::move(built)).first->second;
  }
  auto parts = enumerate_partitions(n);
  return (*list)[std::find(parts.begin(), parts.end(), mu) - parts.begin()];
}

SymFunc macdonald_H(const Partition& mu) {
  if (mu.empty()) return SymFunc::scalar(1);
  const MacdonaldDegree& d = macdonald_degree(mu.size());
  size_t i = std::find(d.parts.begin(), d.parts.end(), mu) - d.parts.begin();
  return from_s_coordinates(d.h[i], d.parts);
}

SymFunc macdonald_H_via_P(const Partition& mu) {
  ParamRat t_inv = ParamRat::t(-1);
  SymFunc p = macdonald_P(mu).map_coefficients([&](const ParamRat& c) {
    return substitute(c, {{Param::t, t_inv}});
  });
  ParamRat factor(1);
  for (const auto& c : cell_data(mu)) factor *= ParamRat::q(c.arm) - ParamRat::t(c.leg + 1);
  // The product formula lands on omega(H_mu) in the Schur normalization
  // used by the system above.
  return omega(convert(factor * plethysm(p, scaled_alphabet(1 / (1 - ParamRat::t()))), Basis::s));
}

ParamRat qt_kostka(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw ShapeError("qt_kostka needs partitions of equal size");
  return macdonald_H(mu).coefficient(lambda);
}

const MacdonaldDegree& macdonald_degree(int n) {
  {
    std::shared_lock lock(cache_mutex);
    if (auto it = degree_cache.find(n); it != degree_cache.end()) return it->second;
  }
  if (n < 1) throw MacdonaldError("Macdonald basis needs degree at least 1");
  if (n > degree_limit.load())
    throw MacdonaldError("degree " + std::to_string(n) + " exceeds the Macdonald degree limit " +
                         std::to_string(degree_limit.load()));
  MacdonaldDegree built = build_degree(n);
  std::unique_lock lock(cache_mutex);
  return degree_cache.try_emplace(n, std::move(built)).first->second;
}

void set_macdonald_degree_limit(int n) { degree_limit.store(n); }
int macdonald_degree_limit() { return degree_limit.load(); }

std::map<Partition, ParamRat> expand_in_H(const SymFunc& f) {
  if (!f.is_homogeneous()) throw MacdonaldError("expand_in_H needs a homogeneous function");
  std::map<Partition, ParamRat> out;
  if (f.is_zero()) return out;
  int n = f.max_degree();
  if (n == 0) {
    out.emplace(Partition(), f.terms().begin()->second);
    return out;
  }
  const MacdonaldDegree& d = macdonald_degree(n);
  Vector a = row_times(s_coordinates(f, d.parts), d.h_inverse);
  for (size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero()) out.emplace(d.parts[i], a[i]);
  return out;
}

SymFunc apply_eigen(const Eigenvalue& ev, const SymFunc& g) {
  SymFunc out(Basis::s);
  for (int n : g.degrees()) {
    SymFunc part = g.homogeneous_part(n);
    if (n == 0) {
      out += ev(Partition()) * part;
      continue;
    }
    const MacdonaldDegree& d = macdonald_degree(n);
    Vector a = row_times(s_coordinates(part, d.parts), d.h_inverse);
    for (size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) a[i] *= ev(d.parts[i]);
    out += from_s_coordinates(row_times(a, d.h), d.parts);
  }
  return out;
}

const Matrix& eigen_matrix_nabla(int n) { return cached_operator(n, 0, T_mu); }

const Matrix& eigen_matrix_D0(int n) {
  return cached_operator(n, 1, [](const Partition& mu) { return 1 - M() * B_mu(mu); });
}

SymFunc Delta(const SymFunc& g) { return apply_eigen(B_mu, g); }

SymFunc nabla(const SymFunc& g, int r) {
  if (r == 1) return apply_matrix_by_degree(g, eigen_matrix_nabla, ParamRat(1));
  return apply_eigen([r](const Partition& mu) { return T_mu(mu).pow(r); }, g);
}

SymFunc Delta_f(const SymFunc& f, const SymFunc& g) {
  return apply_eigen([&f](const Partition& mu) { return eval_scalar(f, B_mu(mu)); }, g);
}

SymFunc D0(const SymFunc& g) { return apply_matrix_by_degree(g, eigen_matrix_D0, ParamRat(1)); }

SymFunc nabla_t1(const SymFunc& g) {
  return star_diagonal(g, Basis::h, [](const Partition& mu) { return ParamRat::q(mu.conjugate().n()); });
}

SymFunc nabla_t_1overq(const SymFunc& g) {
  return star_diagonal(g, Basis::s, [](const Partition& mu) {
    return ParamRat::q(mu.conjugate().n() - mu.n());
  });
}

ParamRat at_t1(const ParamRat& c) { return substitute(c, {{Param::t, ParamRat(1)}}); }
ParamRat at_t_inverse_q(const ParamRat& c) { return substitute(c, {{Param::t, ParamRat::q(-1)}}); }

SymFunc specialize(const SymFunc& f, const Bindings& b) {
  return f.map_coefficients([&b](const ParamRat& c) { return substitute(c, b); });
}

SymFunc s_hat(const Partition& mu) {
  int iota = 0;
  for (int i = 0; i < mu.length(); ++i) iota += std::max(0, mu[i] - (i + 1));
  ParamRat c = (ParamRat(-1) / (ParamRat::q() * ParamRat::t())).pow(iota);
  return SymFunc(Basis::s, mu, c);
}

}  // namespace qtsym
