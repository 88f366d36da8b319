#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qtsym/macdonald.hpp"

namespace qtsym {

class RectangularError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// r_k = floor(m(n-k)/n) for k = 1..n, zeros kept.
std::vector<int> staircase_rows(int m, int n);
Partition staircase(int m, int n);

struct DyckPath {
  int m = 0;
  int n = 0;
  Partition mu;  // inside staircase(m, n)

  int area() const;
  // Heights of the columns of the vertical strip (mu + 1^n)/mu, left to right.
  std::vector<int> column_heights() const;
  // The n row lengths bottom-up with zeros kept, e.g. "322100".
  std::string label() const;
  friend bool operator==(const DyckPath&, const DyckPath&) = default;
};

DyckPath make_dyck_path(int m, int n, const Partition& mu);  // validates containment
std::vector<DyckPath> dyck_paths(int m, int n);
ParamRat cat_q(int m, int n);
ParamRat cat_q_constant_term(int m, int n);
BigInt bizley_cat(int m, int n);
BigInt bizley_park(int m, int n);

struct ParkingFunction {
  DyckPath path;
  std::vector<int> labels;  // labels[y] sits on the vertical step of row y (bottom-up)

  // Entry i-1 is the number of cells of mu left of the step labelled i.
  std::vector<int> word() const;
  std::string to_string() const;  // e.g. "0420043 on 4432"
};

std::vector<ParkingFunction> parking_enumerate(const DyckPath& path);
BigInt parking_count(int m, int n);  // sum over paths of the column-height multinomial

long rank(int m, int n, int x, int y);

// (m,n) = first + second with s*u - r*v = gcd(m,n) for first = (r,s),
// second = (u,v), both nonzero with nonnegative entries.
struct Split {
  std::pair<int, int> first;
  std::pair<int, int> second;
  friend bool operator==(const Split&, const Split&) = default;
};
std::vector<Split> all_splits(int m, int n);  // increasing r
Split split(int m, int n);                    // the one with the smallest r

// Q_{mn} as a normalized commutator word in p1 (Q_{01}), D0 (Q_{10}) and,
// for (0,k) with k > 1, multiplication by pi_k. Applied through per-degree
// matrices in Schur coordinates.
class EhaOperator {
 public:
  struct Node;

  int m() const;
  int n() const;
  int m_power() const;        // number of brackets, i.e. the power of 1/M
  std::string bracket() const;  // "[[p1,D0],D0]"
  std::string word() const;     // "(1/M^2)[[p1,D0],D0]"
  // Lambda_d -> Lambda_{d+n} in Schur coordinates, row vector convention.
  const Matrix& matrix(int d) const;

  static EhaOperator generator_p1();
  static EhaOperator generator_D0();
  static EhaOperator pi_multiplication(int k);
  static EhaOperator commutator(const EhaOperator& a, const EhaOperator& b);

 private:
  explicit EhaOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

EhaOperator q_operator(int m, int n);
// Q_{mn} built with the given top-level split; subwords use split().
EhaOperator q_operator(int m, int n, const Split& top);
SymFunc apply(const EhaOperator& op, const SymFunc& g);
// Q_{(a mu_1, b mu_1)} ... Q_{(a mu_l, b mu_l)} applied to g.
SymFunc apply_q_product(int a, int b, const Partition& mu, const SymFunc& g);
SymFunc pi_mn(int m, int n);  // Q_{mn}(1)

// g = sum c_mu pi_mu, returns sum c_mu Q_{(a,b)mu}(1).
SymFunc seed_family(const SymFunc& g, int a, int b);

enum class StripVariant { direct, formula };
// direct: sum over mu in the staircase of s_{(mu+1^n)/mu}.
// formula: sum_{mu |- d} z_mu^{-1} prod_k (1/a) e_{kb}[k a x].
SymFunc strip_schur_sum(int m, int n, StripVariant variant = StripVariant::direct);
// sum q^{area(mu)} s_{(mu+1^n)/mu}
SymFunc strip_schur_sum_q(int m, int n);

// sum of s_lambda[A] s_mu(x) over the terms of the (4,4) mold, for a scalar
// alphabet A such as q, q+t or an integer k (k copies of 1).
SymFunc mold_44(const ParamRat& alphabet);

}  // namespace qtsym
