#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qtsym/plethysm.hpp"
#include "qtsym/symfunc.hpp"

namespace qtsym {

class MacdonaldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ParamRat M();  // (1-q)(1-t)

// Cell statistics. Cells are (i,j) = (column, row) as in Partition::cells().
ParamRat B_mu(const Partition& mu);   // sum q^i t^j
ParamRat T_mu(const Partition& mu);   // q^{n(mu')} t^{n(mu)}
ParamRat Pi_mu(const Partition& mu);  // prod over cells other than (0,0) of (1 - q^i t^j)
ParamRat w_mu(const Partition& mu);   // prod (q^a - t^{l+1})(t^l - q^{a+1})

ParamRat qt_scalar(const SymFunc& f, const SymFunc& g);
ParamRat star_scalar(const SymFunc& f, const SymFunc& g);

// Monic in m with lower terms below mu in dominance, orthogonal for qt_scalar.
SymFunc macdonald_P(const Partition& mu);
// From the linear system on Schur coefficients; result in the s basis.
SymFunc macdonald_H(const Partition& mu);
// omega of P_mu(q,1/t)[x/(1-t)] prod (q^a - t^{l+1}), used as a cross-check.
SymFunc macdonald_H_via_P(const Partition& mu);
ParamRat qt_kostka(const Partition& lambda, const Partition& mu);

// Per-degree data. Rows of `h` are the s-coordinates of H_mu, indexed like
// enumerate_partitions(n); `h_inverse` maps s-coordinates to H-coordinates.
struct MacdonaldDegree {
  int n = 0;
  std::vector<Partition> parts;
  Matrix h;
  Matrix h_inverse;
};
const MacdonaldDegree& macdonald_degree(int n);
void set_macdonald_degree_limit(int n);
int macdonald_degree_limit();

std::map<Partition, ParamRat> expand_in_H(const SymFunc& f);

using Eigenvalue = std::function<ParamRat(const Partition&)>;
// g expanded in H, each H_mu scaled by ev(mu), result in the s basis.
// Non-homogeneous g is handled degree by degree.
SymFunc apply_eigen(const Eigenvalue& ev, const SymFunc& g);
// Operator matrix on degree n in s-coordinates (row vector convention),
// cached for the named operators below.
const Matrix& eigen_matrix_nabla(int n);
const Matrix& eigen_matrix_D0(int n);

SymFunc Delta(const SymFunc& g);
SymFunc nabla(const SymFunc& g, int r = 1);
SymFunc Delta_f(const SymFunc& f, const SymFunc& g);
SymFunc D0(const SymFunc& g);

// nabla at t=1 through h*_mu, and at t=1/q through s*_mu. Results in the s basis.
SymFunc nabla_t1(const SymFunc& g);
SymFunc nabla_t_1overq(const SymFunc& g);

ParamRat at_t1(const ParamRat& c);
ParamRat at_t_inverse_q(const ParamRat& c);
SymFunc specialize(const SymFunc& f, const Bindings& b);

// (-1/qt)^{iota(mu)} s_mu with iota the sum of the positive mu_i - i.
SymFunc s_hat(const Partition& mu);

}  // namespace qtsym
