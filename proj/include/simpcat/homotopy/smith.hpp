// Smith normal form invariants over the integers, exact.
#ifndef SIMPCAT_HOMOTOPY_SMITH_HPP_
#define SIMPCAT_HOMOTOPY_SMITH_HPP_

#include <vector>

#include "simpcat/common.hpp"

namespace simpcat {

// Column-sparse integer matrix.
struct SparseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, int>>> columns;  // (row, value), rows distinct

  SparseMatrix() = default;
  SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}
  void add(int row, int col, int value);
  std::vector<std::vector<Integer>> dense() const;
};

using DenseMatrix = std::vector<std::vector<Integer>>;

// Nonzero elementary divisors d1 | d2 | ... (all positive). The rank is their count.
std::vector<Integer> smith_invariants(const DenseMatrix& m);
std::vector<Integer> smith_invariants(const SparseMatrix& m);

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace simpcat

#endif  // SIMPCAT_HOMOTOPY_SMITH_HPP_
