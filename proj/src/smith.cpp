#include "segal/smith.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace segal {

void SparseMatrix::add(int r, int c, const Integer& v) {
  if (v == 0) return;
  auto& col = column[c];
  auto [it, fresh] = col.emplace(r, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  }
}

Matrix SparseMatrix::dense() const {
  Matrix m(rows, std::vector<Integer>(cols));
  for (int c = 0; c < cols; ++c)
    for (const auto& [r, v] : column[c]) m[r][c] = v;
  return m;
}

Matrix identity_matrix(std::size_t n) {
  Matrix m(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix c(n, std::vector<Integer>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Integer determinant(Matrix m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

struct Smith {
  Matrix S, U, V;
  bool track;
  std::size_t rows, cols;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(S[a], S[b]);
    if (track) std::swap(U[a], U[b]);
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : S) std::swap(row[a], row[b]);
    if (track)
      for (auto& row : V) std::swap(row[a], row[b]);
  }
  // row a += q * row b
  void add_row(std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t j = 0; j < cols; ++j)
      if (S[b][j] != 0) S[a][j] += q * S[b][j];
    if (track)
      for (std::size_t j = 0; j < rows; ++j)
        if (U[b][j] != 0) U[a][j] += q * U[b][j];
  }
  // col a += q * col b
  void add_col(std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < rows; ++i)
      if (S[i][b] != 0) S[i][a] += q * S[i][b];
    if (track)
      for (std::size_t i = 0; i < cols; ++i)
        if (V[i][b] != 0) V[i][a] += q * V[i][b];
  }
  void negate_row(std::size_t a) {
    for (auto& v : S[a]) v = -v;
    if (track)
      for (auto& v : U[a]) v = -v;
  }

  void run() {
    const std::size_t lim = std::min(rows, cols);
    for (std::size_t t = 0; t < lim; ++t) {
      // Smallest nonzero entry of the remaining block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (S[i][j] != 0 && (pi == rows || abs_value(S[i][j]) < best)) {
            best = abs_value(S[i][j]);
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (S[i][t] != 0) {
            Integer q = S[i][t] / S[t][t];
            add_row(i, t, -q);
            if (S[i][t] != 0) clean = false;
          }
        for (std::size_t j = t + 1; j < cols; ++j)
          if (S[t][j] != 0) {
            Integer q = S[t][j] / S[t][t];
            add_col(j, t, -q);
            if (S[t][j] != 0) clean = false;
          }
        if (!clean) {
          // A remainder is smaller than the pivot; move the smallest one in.
          std::size_t bi = t, bj = t;
          Integer b = abs_value(S[t][t]);
          for (std::size_t i = t + 1; i < rows; ++i)
            if (S[i][t] != 0 && abs_value(S[i][t]) < b) {
              b = abs_value(S[i][t]);
              bi = i;
              bj = t;
            }
          for (std::size_t j = t + 1; j < cols; ++j)
            if (S[t][j] != 0 && abs_value(S[t][j]) < b) {
              b = abs_value(S[t][j]);
              bi = t;
              bj = j;
            }
          swap_rows(t, bi);
          swap_cols(t, bj);
          continue;
        }
        std::size_t bad = rows;
        for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
          for (std::size_t j = t + 1; j < cols; ++j)
            if (S[i][j] % S[t][t] != 0) {
              bad = i;
              break;
            }
        if (bad == rows) break;
        add_row(t, bad, 1);
      }
      if (S[t][t] < 0) negate_row(t);
    }
  }
};

}  // namespace

SmithResult smith_normal_form(const Matrix& m) {
  Smith s;
  s.rows = m.size();
  s.cols = m.empty() ? 0 : m[0].size();
  s.S = m;
  s.track = true;
  s.U = identity_matrix(s.rows);
  s.V = identity_matrix(s.cols);
  s.run();
  return {std::move(s.U), std::move(s.S), std::move(s.V)};
}

std::vector<Integer> smith_diagonal(const Matrix& m) {
  Smith s;
  s.rows = m.size();
  s.cols = m.empty() ? 0 : m[0].size();
  s.S = m;
  s.track = false;
  s.run();
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(s.rows, s.cols); ++i)
    if (s.S[i][i] != 0) d.push_back(s.S[i][i]);
  return d;
}

ElementaryDivisors elementary_divisors(const SparseMatrix& m) {
  std::vector<std::map<int, Integer>> rows(m.rows);
  std::vector<std::set<int>> col_rows(m.cols);
  for (int c = 0; c < m.cols; ++c)
    for (const auto& [r, v] : m.column[c]) {
      rows[r][c] = v;
      col_rows[c].insert(r);
    }
  ElementaryDivisors out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int r = 0; r < m.rows; ++r) {
      if (rows[r].empty()) continue;
      int pc = -1;
      std::size_t best = 0;
      for (const auto& [c, v] : rows[r])
        if ((v == 1 || v == -1) && (pc < 0 || col_rows[c].size() < best)) {
          pc = c;
          best = col_rows[c].size();
        }
      if (pc < 0) continue;
      const Integer u = rows[r][pc];
      std::vector<int> others(col_rows[pc].begin(), col_rows[pc].end());
      for (int r2 : others) {
        if (r2 == r) continue;
        Integer f = rows[r2][pc] * u;
        for (const auto& [c, v] : rows[r]) {
          Integer nv = rows[r2][c] - f * v;
          if (nv == 0) {
            rows[r2].erase(c);
            col_rows[c].erase(r2);
          } else {
            rows[r2][c] = nv;
            col_rows[c].insert(r2);
          }
        }
      }
      for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
      rows[r].clear();
      ++out.rank;
      progress = true;
    }
  }
  std::vector<int> live_rows, live_cols;
  std::map<int, int> col_pos;
  for (int r = 0; r < m.rows; ++r)
    if (!rows[r].empty()) live_rows.push_back(r);
  for (int c = 0; c < m.cols; ++c)
    if (!col_rows[c].empty()) {
      col_pos[c] = static_cast<int>(live_cols.size());
      live_cols.push_back(c);
    }
  if (!live_rows.empty()) {
    Matrix rest(live_rows.size(), std::vector<Integer>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows[live_rows[i]]) rest[i][col_pos[c]] = v;
    for (const auto& d : smith_diagonal(rest)) {
      ++out.rank;
      if (d > 1) out.torsion.push_back(d);
    }
  }
  return out;
}

}  // namespace segal
