#include "core/homology.hpp"

#include <algorithm>
#include <map>

namespace cyclact {

CycleLattice cycle_lattice(const SidePairedPolygon &p) {
  CycleLattice lat;
  lat.n_letters = p.n_letters;
  lat.polygon_word = p.word;
  lat.letter_names = p.letter_names;
  auto classes = vertex_classes(p);
  std::vector<int> cls(p.k, -1);
  for (int i = 0; i < (int)classes.size(); ++i)
    for (int v : classes[i]) cls[v] = i;
  std::map<int, int> pos;
  for (int i = 0; i < p.k; ++i) pos[p.word[i]] = i;
  lat.boundary.assign(classes.size(), std::vector<i64>(p.n_letters, 0));
  for (int id = 1; id <= p.n_letters; ++id) {
    int at = pos.at(id);  // positive occurrence: tail v_at, head v_{at+1}
    lat.boundary[cls[(at + 1) % p.k]][id - 1] += 1;
    lat.boundary[cls[at]][id - 1] -= 1;
  }
  auto norm = normalize_full(p.word, p.n_letters, p.family2n);
  lat.basis = norm.basis;
  if ((i64)lat.basis.size() != 2 * quotient_genus(p))
    fail("Internal", "normalization produced a basis of the wrong rank");
  for (const auto &v : lat.basis)
    for (size_t r = 0; r < lat.boundary.size(); ++r) {
      i64 s = 0;
      for (int j = 0; j < lat.n_letters; ++j) s += lat.boundary[r][j] * v[j];
      if (s != 0) fail("Internal", "basis vector is not a cycle");
    }
  return lat;
}

std::vector<i64> solve_in_basis(const CycleLattice &lat, const std::vector<i64> &v) {
  int L = lat.n_letters, n = (int)lat.basis.size();
  std::vector<std::vector<i64>> A(L, std::vector<i64>(n));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < L; ++i) A[i][j] = lat.basis[j][i];
  auto x = solve_rational(A, v);
  if (!x) fail("IntegralSolveFailed", "vector outside the cycle lattice span");
  std::vector<i64> out(n);
  for (int j = 0; j < n; ++j) {
    if (!(*x)[j].integral()) fail("IntegralSolveFailed", "non-integral coordinates");
    out[j] = (*x)[j].to_i64();
  }
  return out;
}

i64 intersection_number(const SignedWord &word, int n_letters,
                        const std::vector<i64> &c, const std::vector<i64> &d) {
  int k = (int)word.size();
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[word[i]] = i;
  // chord duals: gamma_f = signed letters strictly between the positive and
  // negative occurrence of f; <e, gamma_f> = delta_{ef}
  std::vector<std::vector<i64>> G(n_letters, std::vector<i64>(n_letters, 0));
  for (int f = 1; f <= n_letters; ++f) {
    int pp = pos.at(f), pn = pos.at(-f);
    for (int q = (pp + 1) % k; q != pn; q = (q + 1) % k) {
      int x = word[q];
      G[f - 1][std::abs(x) - 1] += (x > 0) ? 1 : -1;
    }
  }
  // solve sum_f t_f gamma_f = d; then <c,d> = sum_f c_f t_f
  std::vector<std::vector<i64>> A(n_letters, std::vector<i64>(n_letters));
  for (int r = 0; r < n_letters; ++r)
    for (int f = 0; f < n_letters; ++f) A[r][f] = G[f][r];
  auto t = solve_rational(A, d);
  if (!t) fail("Internal", "cycle not representable by chord duals");
  Rat val(0);
  for (int f = 0; f < n_letters; ++f) val = val + Rat(c[f]) * (*t)[f];
  return val.to_i64();
}

std::vector<i64> apply_perm(const SignedPerm &perm, const std::vector<i64> &v) {
  std::vector<i64> out(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) {
    if (!v[i]) continue;
    int img = perm.image[i];
    out[std::abs(img) - 1] += (img > 0 ? 1 : -1) * v[i];
  }
  return out;
}

IntMatrix rep_type1(const SidePairedPolygon &p) {
  auto lat = cycle_lattice(p);
  auto perm = rotation_action(p);
  int m = (int)lat.basis.size();
  int L = lat.n_letters;
  std::vector<std::vector<i64>> A(L, std::vector<i64>(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < L; ++i) A[i][j] = lat.basis[j][i];
  std::vector<std::vector<i64>> rhs;
  for (int j = 0; j < m; ++j) rhs.push_back(apply_perm(perm, lat.basis[j]));
  auto sols = solve_rational_multi(A, rhs);
  IntMatrix M(m, m);
  for (int j = 0; j < m; ++j) {
    if (!sols[j]) fail("IntegralSolveFailed", "image outside the cycle lattice");
    for (int i = 0; i < m; ++i) {
      if (!(*sols[j])[i].integral()) fail("IntegralSolveFailed", "non-integral coordinates");
      M.at(i, j) = (*sols[j])[i].to_i64();
    }
  }
  return M;
}

IntMatrix rep_type1(const DataSet &d) { return rep_type1(build_polygon(d)); }

IntMatrix rep_of(const DataSet &d) {
  if (d.n == 1) return IntMatrix::identity((int)(2 * genus(d)));
  if (classify(d).kind != ActionKind::Type1)
    fail("UnsupportedCase", "representation implemented for Type 1 data sets");
  return rep_type1(d);
}

IntMatrix rep_direct_sum(const DataSet &a, const DataSet &b, int r, int s) {
  if (a.n != b.n) fail("DegreeMismatch", "direct sum needs equal degrees");
  if (a.n != 1) {
    if (r < 1 || r > a.ell() || s < 1 || s > b.ell())
      fail("IndexOutOfRange", "bad compatibility indices");
    if (!pair_compatible(a, b, r, s)) fail("NotCompatible", "not a compatible pair");
    if (a.cones[r - 1].n != a.n) fail("NotFixedPointCompat", "direct sum needs a fixed-point compatibility");
  }
  IntMatrix A = rep_of(a), B = rep_of(b);
  IntMatrix M(A.rows + B.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) M.at(i, j) = A.at(i, j);
  for (int i = 0; i < B.rows; ++i)
    for (int j = 0; j < B.cols; ++j) M.at(A.rows + i, A.cols + j) = B.at(i, j);
  return M;
}

} // namespace cyclact
