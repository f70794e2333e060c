#include "simpcat/homotopy/smith.hpp"

#include <algorithm>
#include <map>

namespace simpcat {

void SparseMatrix::add(int row, int col, int value) {
  if (value == 0) return;
  auto& c = columns.at(col);
  for (auto& [r, v] : c)
    if (r == row) {
      v += value;
      if (v == 0) c.erase(std::find(c.begin(), c.end(), std::pair{r, 0}));
      return;
    }
  c.emplace_back(row, value);
}

DenseMatrix SparseMatrix::dense() const {
  DenseMatrix out(rows, std::vector<Integer>(cols));
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : columns[c]) out[r][c] = v;
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k ? b[0].size() : 0;
  DenseMatrix out(n, std::vector<Integer>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

namespace {

Integer absval(const Integer& v) { return v < 0 ? Integer(-v) : v; }

}  // namespace

std::vector<Integer> smith_invariants(const DenseMatrix& input) {
  DenseMatrix a = input;
  const int m = static_cast<int>(a.size());
  const int n = m ? static_cast<int>(a[0].size()) : 0;
  std::vector<Integer> diag;
  auto swap_cols = [&](int x, int y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };
  for (int t = 0; t < m && t < n; ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (a[i][j] != 0 && (pi < 0 || absval(a[i][j]) < absval(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    swap_cols(t, pj);
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const Integer q = a[i][t] / a[t][t];
        for (int j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const Integer q = a[t][j] / a[t][t];
        for (int i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        int bi = t, bj = t;
        for (int i = t + 1; i < m; ++i)
          if (a[i][t] != 0 && absval(a[i][t]) < absval(a[bi][bj])) bi = i, bj = t;
        for (int j = t + 1; j < n; ++j)
          if (a[t][j] != 0 && absval(a[t][j]) < absval(a[bi][bj])) bi = t, bj = j;
        std::swap(a[t], a[bi]);
        swap_cols(t, bj);
        continue;
      }
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      for (int j = t; j < n; ++j) a[t][j] += a[bad][j];
    }
    diag.push_back(absval(a[t][t]));
  }
  return diag;
}

std::vector<Integer> smith_invariants(const SparseMatrix& m) {
  // Unit-pivot elimination on a row-sparse copy, then dense reduction of the rest.
  using Row = std::map<int, Integer>;
  std::vector<Row> rows(m.rows);
  std::vector<std::vector<int>> col_rows(m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.columns[c]) {
      rows[r][c] = v;
      col_rows[c].push_back(r);
    }
  std::vector<bool> row_alive(m.rows, true), col_alive(m.cols, true);
  int units = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int c = 0; c < m.cols; ++c) {
      if (!col_alive[c]) continue;
      // Compact the column's row list.
      std::vector<int> live;
      for (int r : col_rows[c])
        if (row_alive[r] && rows[r].count(c) && std::find(live.begin(), live.end(), r) == live.end())
          live.push_back(r);
      col_rows[c] = live;
      if (live.empty()) {
        col_alive[c] = false;
        continue;
      }
      int pivot = -1;
      for (int r : live) {
        const Integer& v = rows[r].at(c);
        if ((v == 1 || v == -1) && (pivot < 0 || rows[r].size() < rows[pivot].size())) pivot = r;
      }
      if (pivot < 0) continue;
      const Integer pv = rows[pivot].at(c);
      for (int r : live) {
        if (r == pivot) continue;
        const Integer factor = rows[r].at(c) * pv;
        for (const auto& [cc, v] : rows[pivot]) {
          auto it = rows[r].find(cc);
          if (it == rows[r].end()) {
            rows[r].emplace(cc, -factor * v);
            col_rows[cc].push_back(r);
          } else {
            it->second -= factor * v;
            if (it->second == 0) rows[r].erase(it);
          }
        }
      }
      row_alive[pivot] = false;
      col_alive[c] = false;
      ++units;
      progress = true;
    }
  }
  std::vector<int> rest_rows, rest_cols;
  for (int r = 0; r < m.rows; ++r)
    if (row_alive[r] && !rows[r].empty()) rest_rows.push_back(r);
  std::map<int, int> col_pos;
  for (int c = 0; c < m.cols; ++c)
    if (col_alive[c]) col_pos.emplace(c, 0);
  for (int r : rest_rows)
    for (const auto& [c, v] : rows[r]) (void)v, col_pos.emplace(c, 0);
  int k = 0;
  for (auto& [c, pos] : col_pos) pos = k++;
  DenseMatrix rest(rest_rows.size(), std::vector<Integer>(k));
  for (std::size_t i = 0; i < rest_rows.size(); ++i)
    for (const auto& [c, v] : rows[rest_rows[i]]) rest[i][col_pos.at(c)] = v;
  std::vector<Integer> tail = smith_invariants(rest);
  std::vector<Integer> out(units, Integer(1));
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

}  // namespace simpcat
