#pragma once

#include <stdexcept>
#include <vector>

#include "qtsym/scalars.hpp"

namespace qtsym {

using Vector = std::vector<ParamRat>;
using Matrix = std::vector<Vector>;

class SingularMatrix : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Matrix identity_matrix(size_t n);
Matrix zero_matrix(size_t rows, size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
// Row vector times matrix.
Vector row_times(const Vector& v, const Matrix& a);
Vector times_column(const Matrix& a, const Vector& v);
Matrix inverse(const Matrix& a);
// Solves a x = b for square nonsingular a; b may hold several columns.
Matrix solve(const Matrix& a, const Matrix& b);
Vector solve(const Matrix& a, const Vector& b);
// Least-rows solve of an overdetermined system with a unique solution.
// Throws SingularMatrix when the rank is short and InconsistentSystem when
// some equation is violated by the solution.
Vector solve_overdetermined(const Matrix& a, const Vector& b);
bool is_upper_triangular(const Matrix& a);

}  // namespace qtsym
