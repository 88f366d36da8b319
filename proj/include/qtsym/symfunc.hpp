#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qtsym/linalg.hpp"
#include "qtsym/shapes.hpp"

namespace qtsym {

enum class Basis { m, e, h, p, s, f, pi };

std::string basis_name(Basis b);  // "m", "e", ..., "pi"
std::optional<Basis> basis_from_name(std::string_view name);

// Increasing degree, then decreasing lexicographic order within a degree.
struct GradedOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

class SymFunc {
 public:
  using Terms = std::map<Partition, ParamRat, GradedOrder>;

  SymFunc() = default;
  explicit SymFunc(Basis b) : basis_(b) {}
  SymFunc(Basis b, const Partition& mu, const ParamRat& c = ParamRat(1));
  static SymFunc scalar(const ParamRat& c, Basis b = Basis::s) { return SymFunc(b, Partition(), c); }

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  ParamRat coefficient(const Partition& mu) const;
  void add_term(const Partition& mu, const ParamRat& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  int max_degree() const;  // -1 for zero
  std::vector<int> degrees() const;
  SymFunc homogeneous_part(int d) const;
  SymFunc map_coefficients(const std::function<ParamRat(const ParamRat&)>& fn) const;

  std::string to_string() const;  // e.g. "s[3]+(q+t)*s[2,1]"

  SymFunc& operator+=(const SymFunc& g);
  SymFunc& operator-=(const SymFunc& g);
  SymFunc& operator*=(const ParamRat& c);
  friend SymFunc operator+(SymFunc f, const SymFunc& g) { return f += g; }
  friend SymFunc operator-(SymFunc f, const SymFunc& g) { return f -= g; }
  friend SymFunc operator-(SymFunc f) { return f *= ParamRat(-1); }
  friend SymFunc operator*(SymFunc f, const ParamRat& c) { return f *= c; }
  friend SymFunc operator*(const ParamRat& c, SymFunc f) { return f *= c; }
  friend SymFunc operator*(const SymFunc& f, const SymFunc& g);
  // Mathematical equality (compared through the power-sum expansion).
  friend bool operator==(const SymFunc& f, const SymFunc& g);

 private:
  Basis basis_ = Basis::s;
  Terms terms_;
};

// Shorthands for single basis elements with coefficient 1.
inline SymFunc s(const Partition& mu) { return SymFunc(Basis::s, mu); }
inline SymFunc h(const Partition& mu) { return SymFunc(Basis::h, mu); }
inline SymFunc e(const Partition& mu) { return SymFunc(Basis::e, mu); }
inline SymFunc p(const Partition& mu) { return SymFunc(Basis::p, mu); }
inline SymFunc m(const Partition& mu) { return SymFunc(Basis::m, mu); }

SymFunc convert(const SymFunc& f, Basis target);
SymFunc pow(const SymFunc& f, int k);

// Coefficient row of b_mu in the power sums: b_mu = sum_rho row[rho] p_rho,
// indexed like enumerate_partitions(|mu|).
const Matrix& to_power_sum_matrix(int degree, Basis b);
const Matrix& from_power_sum_matrix(int degree, Basis b);
BigInt character(const Partition& lambda, const Partition& rho);  // chi^lambda(rho)

ParamRat hall(const SymFunc& f, const SymFunc& g);
SymFunc omega(const SymFunc& f);
SymFunc skew(const SymFunc& f, const SymFunc& g);  // f^perp g
SymFunc kronecker(const SymFunc& f, const SymFunc& g);
SymFunc jacobi_trudi(const Partition& mu, bool dual = false);
// Pieri rule h_k * f with the result in the s basis; h_to_s expands
// h-products by iterated Pieri without passing through power sums.
SymFunc pieri_h(int k, const SymFunc& f);
SymFunc h_to_s(const SymFunc& f);
SymFunc schur_product(const Partition& lam, const Partition& mu);  // Jacobi-Trudi + Pieri
SymFunc skew_schur(const SkewShape& shape);  // in the s basis
SymFunc pi_n(int n);
SymFunc expand_in_pi(const SymFunc& f);

struct PositivityReport {
  bool positive = true;
  std::optional<std::pair<Partition, ParamRat>> witness;
};
PositivityReport is_schur_positive(const SymFunc& f);
bool is_nonnegative_polynomial(const ParamRat& c);

}  // namespace qtsym
