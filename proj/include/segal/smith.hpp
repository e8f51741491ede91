// Exact integer Smith normal form.
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace segal {

using Integer = boost::multiprecision::cpp_int;
using Matrix = std::vector<std::vector<Integer>>;  // row-major

/// Column-sparse integer matrix.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::map<int, Integer>> column;  // column[j]: row -> nonzero entry

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), column(c) {}
  void add(int r, int c, const Integer& v);
  Matrix dense() const;
};

struct SmithResult {
  Matrix U;  // rows x rows, unimodular
  Matrix S;  // diagonal with S[i][i] | S[i+1][i+1], nonnegative
  Matrix V;  // cols x cols, unimodular
};

/// U * M * V = S.
SmithResult smith_normal_form(const Matrix& m);
/// Nonzero diagonal of the Smith form, ascending under divisibility.
std::vector<Integer> smith_diagonal(const Matrix& m);

struct ElementaryDivisors {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // divisors > 1, divisibility-sorted
};
/// Unit pivots are eliminated sparsely; whatever remains goes through the dense routine.
ElementaryDivisors elementary_divisors(const SparseMatrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix identity_matrix(std::size_t n);
Integer determinant(Matrix m);

}  // namespace segal
