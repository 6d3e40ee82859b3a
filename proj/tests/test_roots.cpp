#include "core/roots.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cyclact;

static DataSet ds(i64 n, i64 g0, std::vector<ConePoint> cones) {
  return make_dataset(n, g0, 0, std::move(cones));
}

TEST_CASE("root realizing predicate") {
  CHECK(is_root_realizing(ds(5, 0, {{1, 5}, {2, 5}, {3, 5}, {4, 5}})));  // 3+4 = 12 mod 5
  CHECK(is_root_realizing(ds(5, 0, {{3, 5}, {3, 5}, {4, 5}})));
  CHECK(!is_root_realizing(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}})));  // even degree
  CHECK(!is_root_realizing(ds(5, 0, {{1, 5}, {3, 5}, {1, 5}})));  // no pair satisfies it
  // invariance under canonical reordering of the other cones
  CHECK(is_root_realizing(make_dataset(5, 0, 0, {{4, 5}, {1, 5}, {3, 5}, {2, 5}})));
}

TEST_CASE("split of the worked root realizing set") {
  auto d = ds(5, 0, {{1, 5}, {2, 5}, {3, 5}, {4, 5}});
  auto [d1, d2] = split_root(d);
  CHECK(d1 == ds(5, 0, {{1, 5}, {2, 5}, {2, 5}}));
  CHECK(d2 == ds(5, 0, {{3, 5}, {3, 5}, {4, 5}}));
  // recomposition via the (3,1)-compatibility
  CHECK(compose_pair(d1, d2, 3, 1) == d);
  CHECK_THROWS_AS(split_root(d2), Error);  // l = 3
}

TEST_CASE("split round-trips over enumerated root realizing sets") {
  int count = 0;
  for (i64 n : {3, 5, 7, 9, 11}) {
    for (i64 g = 1; g <= 6; ++g) {
      for (const auto &d : enumerate_datasets(n, g)) {
        if (d.ell() < 4 || !is_root_realizing(d)) continue;
        auto [d1, d2] = split_root(d);
        // recomposition at the glued pair (the appended cone of d1 against
        // the complementary cone of d2; positions follow canonical order)
        bool recomposed = false;
        for (int t = 1; t <= d1.ell() && !recomposed; ++t)
          for (int u = 1; u <= d2.ell() && !recomposed; ++u)
            if (pair_compatible(d1, d2, t, u) && compose_pair(d1, d2, t, u) == d)
              recomposed = true;
        CHECK(recomposed);
        ++count;
      }
    }
  }
  CHECK(count > 3);
}

TEST_CASE("nonseparating root representation blocks (worked example)") {
  auto rr = rep_root_nonsep(ds(5, 0, {{3, 5}, {3, 5}, {4, 5}}));
  // E is the printed case list for (l3,m3,l4,m4), shifted here to (l1..m2)
  CHECK(rr.E.at(0, 2) == 1);
  IntMatrix Ewant(4, 4);
  i64 ew[4][4] = {{0, 0, 1, 1}, {1, 0, 0, 1}, {-2, -1, -1, -1}, {1, 0, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) Ewant.at(i, j) = ew[i][j];
  CHECK(rr.E == Ewant);
  CHECK(is_symplectic(rr.E));
  CHECK(matrix_order(rr.E) == 5);

  // B: first column f^{-1}(gamma alpha^{-1}) = -l2 + m2 here, second zero
  CHECK(rr.B.at(0, 0) == 0);
  CHECK(rr.B.at(1, 0) == 0);
  CHECK(rr.B.at(2, 0) == -1);
  CHECK(rr.B.at(3, 0) == 1);
  for (int i = 0; i < 4; ++i) CHECK(rr.B.at(i, 1) == 0);

  // C from symplectic closure: rows (l-handle, m-handle)
  for (int j = 0; j < 4; ++j) CHECK(rr.C.at(0, j) == 0);
  for (int j = 0; j < 4; ++j) CHECK(rr.C.at(1, j) == -1);

  // l5 image = -l4 + m4 + l5; m5 fixed
  CHECK(rr.M.at(2, 4) == -1);
  CHECK(rr.M.at(3, 4) == 1);
  CHECK(rr.M.at(4, 4) == 1);
  CHECK(rr.M.at(5, 4) == 0);
  for (int i = 0; i < 5; ++i) CHECK(rr.M.at(i, 5) == 0);
  CHECK(rr.M.at(5, 5) == 1);
  CHECK(is_symplectic(rr.M));

  // closure is forced: recompute C from E and B
  IntMatrix J2 = symplectic_form(1), Jg = symplectic_form(2);
  auto C2 = matmul(matmul(J2, matmul(transpose(rr.B), Jg)), rr.E);
  CHECK(C2 == rr.C);
}

TEST_CASE("nonseparating root preconditions") {
  CHECK_THROWS_AS(rep_root_nonsep(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}})), Error);
  CHECK_THROWS_AS(rep_root_nonsep(ds(5, 0, {{1, 5}, {3, 5}, {1, 5}})), Error);
  // degree must be 2g+1: a root realizing set on too large a degree is
  // already excluded by the bound in the predicate
}

TEST_CASE("separating-curve root pairs") {
  // theta_1 + theta_2 = 2 pi / n: C5 pair with c1^{-1} + c2^{-1} = 1 mod 5
  auto a = ds(5, 0, {{1, 5}, {2, 5}, {2, 5}});
  // distinguished fixed point with c = 2: theta = 2 pi 3/5; partner needs
  // theta' = 2 pi (1-3)/5 = 2 pi 3/5: c'^{-1} = 3 -> c' = 2
  CHECK(root_pair_condition(a, 2, a, 3));
  auto M = rep_root_sep(a, 2, a, 3);
  CHECK(M.rows == 8);
  CHECK(is_symplectic(M));
  auto A = rep_type1(a);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      CHECK(M.at(i, j) == A.at(i, j));
      CHECK(M.at(4 + i, 4 + j) == A.at(i, j));
    }
  // degenerate side: identity action with theta = 0 pairs with c^{-1} = 1
  auto b = ds(7, 0, {{1, 7}, {2, 7}, {4, 7}});
  auto I = make_dataset(1, 2, 0, {});
  CHECK(root_pair_condition(b, 1, I, 1));
  auto M2 = rep_root_sep(b, 1, I, 1);
  CHECK(M2.rows == 2 * genus(b) + 4);
  for (int i = 0; i < 4; ++i) CHECK(M2.at(2 * genus(b) + i, 2 * genus(b) + i) == 1);
  // mismatched angles
  CHECK(!root_pair_condition(a, 1, a, 1));
  CHECK_THROWS_AS(rep_root_sep(a, 1, a, 1), Error);
}
