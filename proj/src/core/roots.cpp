#include "core/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclact {

static bool indices_ok(const DataSet &d, int i, int j) {
  const auto &ci = d.cones[i - 1], &cj = d.cones[j - 1];
  if (ci.n != d.n || cj.n != d.n) return false;
  return mod_norm(ci.c + cj.c, d.n) == mod_norm(checked_mul(ci.c, cj.c), d.n);
}

bool is_root_realizing(const DataSet &d) {
  if (d.n % 2 == 0 || d.n < 3) return false;  // twist roots have odd degree
  if (d.n > 2 * genus(d) + 1) return false;
  for (int i = 1; i <= d.ell(); ++i)
    for (int j = i + 1; j <= d.ell(); ++j)
      if (indices_ok(d, i, j)) return true;
  return false;
}

std::pair<int, int> root_realizing_indices(const DataSet &d) {
  if (!is_root_realizing(d)) fail("NotRootRealizing", "no distinguished pair satisfies the congruence");
  for (int i = 1; i <= d.ell(); ++i)
    for (int j = i + 1; j <= d.ell(); ++j)
      if (indices_ok(d, i, j)) return {i, j};
  fail("Internal", "unreachable");
}

std::pair<DataSet, DataSet> split_root(const DataSet &d) {
  if (d.ell() < 4) fail("TooFewConePoints", "splitting needs at least 4 cone points");
  auto [i, j] = root_realizing_indices(d);
  i64 n = d.n;
  i64 cl1 = d.cones[i - 1].c, cl = d.cones[j - 1].c;
  i64 prod = mod_norm(checked_mul(cl1, cl), n);
  std::vector<ConePoint> c1;
  for (int t = 0; t < d.ell(); ++t)
    if (t != i - 1 && t != j - 1) c1.push_back(d.cones[t]);
  c1.push_back({prod, n});
  DataSet d1 = make_dataset(n, d.g0, 0, c1);
  i64 c = mod_norm(-prod, n);
  DataSet d2 = make_dataset(n, 0, 0, {{c, n}, {cl1, n}, {cl, n}});
  return {d1, d2};
}

RootRep rep_root_nonsep(const DataSet &d) {
  auto cls = classify(d);
  if (cls.kind != ActionKind::Type1 || d.g0 != 0 || d.ell() != 3)
    fail("NotRootRealizing", "theorem form needs an irreducible Type 1 data set");
  if (!is_root_realizing(d)) fail("NotRootRealizing", "distinguished pair congruence fails");
  i64 n = d.n;
  i64 g = genus(d);
  if (n != 2 * g + 1) fail("NotRootRealizing", "degree must be 2g+1");
  auto [i, j] = root_realizing_indices(d);
  // order the cones (c_l, c_{l-1}, rest): both distinguished points sit at
  // the polygon vertex classes, the remaining cone at the center
  int rest = 6 - i - j;
  DataSet ordered = d;
  ordered.cones = {d.cones[j - 1], d.cones[i - 1], d.cones[rest - 1]};
  auto p = build_polygon_ordered(ordered);
  auto lat = cycle_lattice(p);
  auto perm = rotation_action(p);
  int dim = (int)lat.basis.size();
  RootRep out;
  out.E = IntMatrix(dim, dim);
  for (int col = 0; col < dim; ++col) {
    auto img = apply_perm(perm, lat.basis[col]);
    auto co = solve_in_basis(lat, img);
    for (int row = 0; row < dim; ++row) out.E.at(row, col) = co[row];
  }
  // alpha = side 0 (an edge path joining the two distinguished vertex
  // classes); gamma = its rotation image; B column 1 = f^{-1}(gamma alpha^-1)
  std::vector<i64> chain(p.n_letters, 0);
  auto addside = [&](int pos, i64 sgn) {
    int lit = p.word[pos];
    chain[std::abs(lit) - 1] += (lit > 0 ? sgn : -sgn);
  };
  addside(p.shift % p.k, 1);
  addside(0, -1);
  auto bcol = solve_in_basis(lat, chain);
  out.B = IntMatrix(dim, 2);
  for (int row = 0; row < dim; ++row) out.B.at(row, 0) = bcol[row];
  // C = J2 B^T J E (symplectic closure)
  IntMatrix J2 = symplectic_form(1), Jg = symplectic_form(dim / 2);
  out.C = matmul(matmul(J2, matmul(transpose(out.B), Jg)), out.E);
  out.M = IntMatrix(dim + 2, dim + 2);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) out.M.at(r, c) = out.E.at(r, c);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < 2; ++c) out.M.at(r, dim + c) = out.B.at(r, c);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < dim; ++c) out.M.at(dim + r, c) = out.C.at(r, c);
  out.M.at(dim, dim) = 1;
  out.M.at(dim + 1, dim + 1) = 1;
  if (!is_symplectic(out.M)) fail("Internal", "root representation is not symplectic");
  return out;
}

bool root_pair_condition(const DataSet &a, int i1, const DataSet &b, int i2) {
  if (i1 < 1 || i1 > a.ell() + (a.n == 1 ? 1 : 0) || i2 < 1 || i2 > b.ell() + (b.n == 1 ? 1 : 0))
    return false;
  i64 n = std::lcm(a.n, b.n);
  // theta_i = 2 pi c_i^{-1} / n_i at the distinguished fixed point; the
  // identity factor contributes zero angle
  i64 sum = 0;
  auto angle = [&](const DataSet &d, int idx) -> std::optional<i64> {
    if (d.n == 1) return 0;  // no cones; caller passes idx 1 by convention
    if (idx < 1 || idx > d.ell()) return std::nullopt;
    const auto &cp = d.cones[idx - 1];
    if (cp.n != d.n) return std::nullopt;  // needs a fixed point
    return checked_mul(n / d.n, mod_inverse(cp.c, d.n));
  };
  auto a1 = angle(a, i1), a2 = angle(b, i2);
  if (!a1 || !a2) return false;
  sum = mod_norm(*a1 + *a2, n);
  return sum == mod_norm(1, n);
}

IntMatrix rep_root_sep(const DataSet &a, int i1, const DataSet &b, int i2) {
  if (!root_pair_condition(a, i1, b, i2))
    fail("NotRootPair", "local rotation angles do not sum to 2 pi / n");
  IntMatrix A = rep_of(a), B = rep_of(b);
  IntMatrix M(A.rows + B.rows, A.cols + B.cols);
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c) M.at(r, c) = A.at(r, c);
  for (int r = 0; r < B.rows; ++r)
    for (int c = 0; c < B.cols; ++c) M.at(A.rows + r, A.cols + c) = B.at(r, c);
  return M;
}

} // namespace cyclact
