#include "core/intmatrix.hpp"

#include <algorithm>
#include <numeric>

namespace cyclact {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix &A, const IntMatrix &B) {
  if (A.cols != B.rows) fail("Shape", "matmul shape mismatch");
  IntMatrix C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      i64 v = A.at(i, k);
      if (!v) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = checked_add(C.at(i, j), checked_mul(v, B.at(k, j)));
    }
  return C;
}

IntMatrix transpose(const IntMatrix &A) {
  IntMatrix T(A.cols, A.rows);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

IntMatrix symplectic_form(int g) {
  IntMatrix J(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    J.at(2 * i, 2 * i + 1) = 1;
    J.at(2 * i + 1, 2 * i) = -1;
  }
  return J;
}

bool is_symplectic(const IntMatrix &M) {
  if (M.rows != M.cols || M.rows % 2) return false;
  IntMatrix J = symplectic_form(M.rows / 2);
  return matmul(matmul(transpose(M), J), M) == J;
}

std::optional<i64> matrix_order(const IntMatrix &M, i64 bound) {
  if (M.rows != M.cols) fail("Shape", "order of a non-square matrix");
  IntMatrix I = IntMatrix::identity(M.rows), X = M;
  for (i64 k = 1; k <= bound; ++k) {
    if (X == I) return k;
    X = matmul(X, M);
  }
  return std::nullopt;
}

IntMatrix to_split_basis(const IntMatrix &M) {
  if (M.rows != M.cols || M.rows % 2) fail("Shape", "basis conversion needs even square");
  int g = M.rows / 2;
  std::vector<int> perm(2 * g);  // new index -> old index
  for (int i = 0; i < g; ++i) {
    perm[i] = 2 * i;
    perm[g + i] = 2 * i + 1;
  }
  IntMatrix R(2 * g, 2 * g);
  for (int i = 0; i < 2 * g; ++i)
    for (int j = 0; j < 2 * g; ++j) R.at(i, j) = M.at(perm[i], perm[j]);
  return R;
}

std::vector<std::optional<std::vector<Rat>>> solve_rational_multi(
    const std::vector<std::vector<i64>> &A, const std::vector<std::vector<i64>> &rhs) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  int k = (int)rhs.size();
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n));
  std::vector<std::vector<Rat>> B(m, std::vector<Rat>(k));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
    for (int j = 0; j < k; ++j) B[i][j] = Rat(rhs[j][i]);
  }
  std::vector<int> piv;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int sel = -1;
    for (int i = r; i < m; ++i)
      if (!M[i][col].zero()) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    std::swap(B[r], B[sel]);
    piv.push_back(col);
    for (int i = 0; i < m; ++i) {
      if (i == r || M[i][col].zero()) continue;
      Rat f = M[i][col] / M[r][col];
      for (int j = col; j < n; ++j) M[i][j] = M[i][j] - f * M[r][j];
      for (int j = 0; j < k; ++j) B[i][j] = B[i][j] - f * B[r][j];
    }
    ++r;
  }
  std::vector<std::optional<std::vector<Rat>>> out(k);
  for (int j = 0; j < k; ++j) {
    bool ok = true;
    for (int i = r; i < m && ok; ++i)
      if (!B[i][j].zero()) ok = false;
    if (!ok) { out[j] = std::nullopt; continue; }
    std::vector<Rat> x(n, Rat(0));
    for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = B[i][j] / M[i][piv[i]];
    out[j] = std::move(x);
  }
  return out;
}

std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<i64>> &A,
                                               const std::vector<i64> &b) {
  auto r = solve_rational_multi(A, {b});
  return r[0];
}

std::vector<std::vector<i64>> integer_kernel(const std::vector<std::vector<i64>> &A) {
  int m = (int)A.size();
  int n = m ? (int)A[0].size() : 0;
  std::vector<std::vector<Rat>> M(m, std::vector<Rat>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
  std::vector<int> piv;
  int r = 0;
  for (int col = 0; col < n && r < m; ++col) {
    int sel = -1;
    for (int i = r; i < m; ++i)
      if (!M[i][col].zero()) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(M[r], M[sel]);
    piv.push_back(col);
    for (int i = 0; i < m; ++i) {
      if (i == r || M[i][col].zero()) continue;
      Rat f = M[i][col] / M[r][col];
      for (int j = col; j < n; ++j) M[i][j] = M[i][j] - f * M[r][j];
    }
    ++r;
  }
  std::vector<char> ispiv(n, 0);
  for (int c : piv) ispiv[c] = 1;
  std::vector<std::vector<i64>> basis;
  for (int fc = 0; fc < n; ++fc) {
    if (ispiv[fc]) continue;
    std::vector<Rat> x(n, Rat(0));
    x[fc] = Rat(1);
    for (int i = 0; i < (int)piv.size(); ++i) x[piv[i]] = -(M[i][fc] / M[i][piv[i]]);
    // clear denominators, make primitive
    __int128 den = 1;
    for (auto &t : x) den = den / Rat::g128(den, t.den) * t.den;
    std::vector<i64> v(n);
    __int128 g = 0;
    for (int j = 0; j < n; ++j) {
      __int128 val = x[j].num * (den / x[j].den);
      if (val > INT64_MAX || val < INT64_MIN) fail("Overflow", "kernel entry too large");
      v[j] = (i64)val;
      g = Rat::g128(g, val);
    }
    if (g > 1)
      for (auto &t : v) t /= (i64)g;
    basis.push_back(v);
  }
  return basis;
}

i64 det(const std::vector<std::vector<i64>> &A) {
  int n = (int)A.size();
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) M[i][j] = Rat(A[i][j]);
  Rat d(1);
  for (int i = 0; i < n; ++i) {
    int sel = -1;
    for (int r = i; r < n; ++r)
      if (!M[r][i].zero()) { sel = r; break; }
    if (sel < 0) return 0;
    if (sel != i) { std::swap(M[sel], M[i]); d = -d; }
    d = d * M[i][i];
    for (int r = i + 1; r < n; ++r) {
      if (M[r][i].zero()) continue;
      Rat f = M[r][i] / M[i][i];
      for (int c = i; c < n; ++c) M[r][c] = M[r][c] - f * M[i][c];
    }
  }
  return d.to_i64();
}

} // namespace cyclact
