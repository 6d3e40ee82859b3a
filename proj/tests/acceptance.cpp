// Acceptance suite: one pass/fail line per criterion, exact integer
// equality throughout. Exit status is the number of failed criteria.
#include "core/comp_pair.hpp"
#include "core/decompose.hpp"
#include "core/fatgraph.hpp"
#include "core/homology.hpp"
#include "core/json_io.hpp"
#include "core/roots.hpp"

#include <chrono>
#include <iostream>
#include <set>

using namespace cyclact;

namespace {

int g_failures = 0;

void report(int num, const std::string &name, bool ok, const std::string &note = "") {
  std::cout << "criterion " << num << " (" << name << "): " << (ok ? "PASS" : "FAIL");
  if (!note.empty()) std::cout << " -- " << note;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

DataSet ds(i64 n, i64 g0, std::vector<ConePoint> cones) {
  return make_dataset(n, g0, 0, std::move(cones));
}

IntMatrix from_rows(std::vector<std::vector<i64>> rows) {
  IntMatrix m((int)rows.size(), (int)rows[0].size());
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

std::vector<DataSet> type1_sets(i64 max_n, i64 max_g, bool irreducible_only) {
  std::vector<DataSet> out;
  for (i64 n = 2; n <= max_n; ++n)
    for (i64 g = 0; g <= max_g; ++g)
      for (const auto &d : enumerate_datasets(n, g)) {
        auto c = classify(d);
        if (c.kind != ActionKind::Type1) continue;
        if (irreducible_only && d.g0 != 0) continue;
        out.push_back(d);
      }
  return out;
}

void criterion1() {
  bool ok = true;
  ok &= validate(5, 0, 0, {{1, 5}, {3, 5}, {1, 5}}).genus == 2;
  ok &= validate(6, 0, 0, {{1, 2}, {1, 2}, {1, 3}, {2, 3}}).genus == 2;
  ok &= validate(30, 1, 0, {{1, 2}, {1, 6}, {1, 10}, {7, 30}}).genus == 49;
  ok &= validate(5, 0, 0, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}).genus == 4;
  ok &= genus(ds(5, 0, {{1, 5}, {3, 5}, {1, 5}})) == 2;
  report(1, "golden data sets", ok);
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  int count = 0;
  bool ok = true;
  std::string note;
  // every irreducible Type 1 set of degree <= 12 (all genera via the
  // degree-wise finite family)
  for (i64 n = 2; n <= 12 && ok; ++n) {
    i64 gmax = (n + 3) / 2;  // irreducible Type 1 genus is at most (n+1)/2
    for (i64 g = 0; g <= gmax && ok; ++g)
      for (const auto &d : enumerate_datasets(n, g)) {
        auto c = classify(d);
        if (c.kind != ActionKind::Type1 || d.g0 != 0) continue;
        ++count;
        auto p = build_polygon(d);
        if (quotient_genus(p) != g) {
          ok = false;
          note = "genus mismatch at " + d.str();
          break;
        }
        if (realized_data_set(p) != d) {
          ok = false;
          note = "realization mismatch at " + d.str();
          break;
        }
        if (p.source.cones[0].n != 2 && p.source.cones[1].n != 2) {
          i64 want = n / p.source.cones[0].n + n / p.source.cones[1].n;
          if ((i64)vertex_classes(p).size() != want) {
            ok = false;
            note = "vertex count mismatch at " + d.str();
            break;
          }
        }
      }
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (ok && count < 80) {  // 88 canonical irreducible Type 1 sets exist
    ok = false;
    note = "too few cases enumerated";
  }
  report(2, "polygon realization", ok,
         note.empty() ? std::to_string(count) + " polygons, " + std::to_string(ms) + " ms" : note);
}

void criterion3() {
  bool ok = true;
  std::string note;
  auto hex = normalize_polygon(build_polygon(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}})));
  // f(l1) = a0 a1, f(m1) = a2 a0^-1
  if (hex.basis != std::vector<std::vector<i64>>{{1, 1, 0}, {-1, 0, 1}}) {
    ok = false;
    note = "hexagon basis mismatch";
  }
  auto dec = normalize_polygon(build_polygon(ds(5, 0, {{1, 5}, {2, 5}, {2, 5}})));
  // printed words a8 a6^-1 / a4^-1 a8 / a2^-1 a8 / a8 a0^-1 a4 a2^-1 over the
  // side letters (a0,a1,a2,a4,a6): positions 8,6,4,2 are the inverse sides of
  // a1,a6-pair partners (see the pairing a_{2m+1}^-1 ~ a_{2m+8})
  std::vector<std::vector<i64>> want = {
      {0, -1, 0, 0, -1}, {0, -1, 0, -1, 0}, {0, -1, -1, 0, 0}, {-1, -1, -1, 1, 0}};
  if (dec.basis != want) {
    ok = false;
    note = "decagon basis mismatch";
  }
  report(3, "normalization golden values", ok, note);
}

void criterion4() {
  auto d1 = ds(6, 0, {{1, 2}, {1, 3}, {1, 6}});
  auto d2 = ds(6, 0, {{1, 2}, {2, 3}, {5, 6}});
  auto M = rep_comp_pair(d1, d2, 2, 2);
  bool sym = is_symplectic(M);
  bool ord = matrix_order(M) == 6;
  bool small_powers = true;
  IntMatrix X = M;
  for (int k = 1; k < 6; ++k) {
    if (X == IntMatrix::identity(6)) small_powers = false;
    X = matmul(X, M);
  }
  auto printed = from_rows({{1, -1, -1, 0, 0, 0},
                            {1, 0, 0, 0, 0, 0},
                            {0, 0, -1, 0, 0, 0},
                            {0, 0, 0, -1, 0, 0},
                            {0, 0, 0, 0, 0, 1},
                            {0, 0, 1, 0, -1, 1}});
  // the paper's matrix drops three meridian bookkeeping terms and is not
  // symplectic as printed; the computed action restores exactly the entries
  // (m1-row of l2), (m2-row of m1), (m2-row of m3)
  std::set<std::pair<int, int>> allowed = {{1, 2}, {3, 1}, {3, 5}};
  int diffs = 0;
  bool clean = true;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (M.at(i, j) != printed.at(i, j)) {
        ++diffs;
        if (!allowed.count({i, j}) || M.at(i, j) != -1) clean = false;
      }
  bool ok = sym && ord && small_powers && clean && diffs == 3;
  report(4, "C6-on-S3 symplectic matrix", ok,
         ok ? "matches print up to 3 documented meridian entries; MtJM=J, M^6=I" : "mismatch");
}

void criterion5() {
  bool ok = true;
  std::string note;
  int count = 0;
  // the enumerated Type 1 family with g <= 6 plus every irreducible Type 1
  // set of degree <= 12
  auto sets = type1_sets(12, 6, false);
  for (i64 n = 2; n <= 12; ++n)
    for (const auto &d : type1_sets(n, (n + 3) / 2, true))
      if (d.n == n) sets.push_back(d);
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  for (const auto &d : sets) {
    ++count;
    IntMatrix M;
    try {
      M = rep_type1(d);
    } catch (const Error &e) {
      ok = false;
      note = d.str() + ": " + e.what();
      break;
    }
    if (!is_symplectic(M) || matrix_order(M) != d.n || M.rows != 2 * genus(d)) {
      ok = false;
      note = "property failure at " + d.str();
      break;
    }
  }
  report(5, "Type 1 representation properties", ok,
         note.empty() ? std::to_string(count) + " data sets" : note);
}

void criterion6() {
  auto d = ds(5, 0, {{3, 5}, {3, 5}, {4, 5}});
  auto rr = rep_root_nonsep(d);
  bool ok = true;
  std::string note;
  // printed B^t = ((0,0,0,0),(0,0,-1,1)); the theorem's convention puts the
  // twist column first, the print lists it second
  IntMatrix Bwant(4, 2);
  Bwant.at(2, 0) = -1;
  Bwant.at(3, 0) = 1;
  if (rr.B != Bwant) { ok = false; note = "B mismatch"; }
  // C from symplectic closure; the printed C differs in its last entry
  // (-1 here, +1 in print), which contradicts MtJM = J
  IntMatrix J2 = symplectic_form(1), Jg = symplectic_form(2);
  auto C2 = matmul(matmul(J2, matmul(transpose(rr.B), Jg)), rr.E);
  if (rr.C != C2) { ok = false; note = "C is not the symplectic closure"; }
  IntMatrix Cwant(2, 4);
  for (int j = 0; j < 4; ++j) Cwant.at(1, j) = -1;
  if (rr.C != Cwant) { ok = false; note = "C values changed"; }
  // l5 image -l4+m4+l5, m5 fixed
  if (!(rr.M.at(2, 4) == -1 && rr.M.at(3, 4) == 1 && rr.M.at(4, 4) == 1 && rr.M.at(5, 4) == 0))
    { ok = false; note = "l5 image mismatch"; }
  for (int i = 0; i < 5; ++i)
    if (rr.M.at(i, 5) != 0) { ok = false; note = "m5 not fixed"; }
  if (rr.M.at(5, 5) != 1) { ok = false; note = "m5 not fixed"; }
  if (!is_symplectic(rr.M)) { ok = false; note = "assembled matrix not symplectic"; }
  report(6, "nonseparating root blocks", ok,
         ok ? "B/l5/m5 exact; C = symplectic closure (printed C deviates in one entry)" : note);
}

void criterion7() {
  bool ok = true;
  std::string note;
  // theta graph with the two printed vertex orders
  json j;
  j["edges"] = {"e1", "e2", "e3"};
  j["sigma0"] = {{"e1", "e2", "e3"}, {"e1^-1", "e3^-1", "e2^-1"}};
  auto planar = fatgraph_from_json(j);
  j["sigma0"] = {{"e1", "e2", "e3"}, {"e1^-1", "e2^-1", "e3^-1"}};
  auto twisted = fatgraph_from_json(j);
  if (boundary_components(planar).size() != 3) { ok = false; note = "planar theta boundaries"; }
  if (boundary_components(twisted).size() != 1) { ok = false; note = "twisted theta boundaries"; }

  // opposite-paired decagon sigma0 cycles
  SidePairedPolygon p;
  p.n = 1;
  p.k = 10;
  p.n_letters = 5;
  p.word = {1, 2, 3, 4, 5, -1, -2, -3, -4, -5};
  p.pairing.resize(10);
  for (int i = 0; i < 10; ++i) p.pairing[i] = (i + 5) % 10;
  p.shift = 0;
  p.letter_names = {"a0", "a1", "a2", "a3", "a4"};
  p.family2n = true;
  auto g = from_polygon(p);
  auto verts = fg_vertices(g);
  if (verts.size() != 2) { ok = false; note = "decagon vertex count"; }
  auto has_cycle = [&](std::vector<std::string> want) {
    for (const auto &cyc : verts) {
      if (cyc.size() != want.size()) continue;
      std::vector<std::string> names;
      for (int dd : cyc) names.push_back(g.dir_name(dd));
      for (size_t r = 0; r < names.size(); ++r) {
        bool match = true;
        for (size_t i = 0; i < names.size() && match; ++i)
          match = names[(r + i) % names.size()] == want[i];
        if (match) return true;
      }
    }
    return false;
  };
  if (!has_cycle({"a0", "a1^-1", "a2", "a3^-1", "a4"})) { ok = false; note = "sigma0 cycle 1"; }
  if (!has_cycle({"a0^-1", "a1", "a2^-1", "a3", "a4^-1"})) { ok = false; note = "sigma0 cycle 2"; }

  // glued C6 pair: six printed vertex classes and the induced vertex action
  auto gp = glue_compatible(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}}), ds(6, 0, {{1, 2}, {2, 3}, {5, 6}}), 2, 2);
  auto gverts = fg_vertices(gp.graph);
  std::vector<std::set<std::string>> want = {
      {"1.a0", "c3", "2.a1^-1", "c5^-1"},    {"1.a0^-1", "c0", "2.a1", "c2^-1"},
      {"1.a1", "c4", "2.a0^-1", "c0^-1"},    {"1.a1^-1", "c1", "2.a0", "c3^-1"},
      {"1.a2", "c5", "2.a2", "c1^-1"},       {"1.a2^-1", "c2", "2.a2^-1", "c4^-1"}};
  std::vector<int> found(6, -1);
  for (int i = 0; i < (int)gverts.size(); ++i) {
    std::set<std::string> s;
    for (int dd : gverts[i]) s.insert(gp.graph.dir_name(dd));
    for (int w = 0; w < 6; ++w)
      if (s == want[w]) found[w] = i;
  }
  for (int w = 0; w < 6; ++w)
    if (found[w] < 0) { ok = false; note = "glued vertex class v" + std::to_string(w + 1); }
  if (ok) {
    std::vector<int> vert_of(gp.graph.n_directed());
    for (int i = 0; i < (int)gverts.size(); ++i)
      for (int dd : gverts[i]) vert_of[dd] = i;
    auto img = [&](int w) { return vert_of[gp.automorphism[gverts[found[w]][0]]]; };
    // the printed example states F|V = (v1,v3,v5)(v2,v4,v6); its own edge
    // maps (omega_1 sends e3 to e1^-1, which lies in v2) force the six-cycle
    // (v1,v3,v5,v2,v4,v6) instead, which is what the construction yields
    bool sixcycle = img(0) == found[2] && img(2) == found[4] && img(4) == found[1] &&
                    img(1) == found[3] && img(3) == found[5] && img(5) == found[0];
    if (!sixcycle) { ok = false; note = "vertex action mismatch"; }
  }
  report(7, "fat graph golden examples", ok,
         ok ? "vertex classes exact; F|V is the six-cycle forced by the printed edge maps" : note);
}

void criterion8() {
  bool ok = true;
  std::string note;
  // C6-on-S2: the worked pair
  auto dec = decompose(ds(6, 0, {{1, 2}, {1, 2}, {1, 3}, {2, 3}}));
  if (dec.root->kind != DecompNode::Kind::Pair ||
      dec.root->child[0]->value != ds(6, 0, {{1, 2}, {1, 3}, {1, 6}}) ||
      dec.root->child[1]->value != ds(6, 0, {{1, 2}, {2, 3}, {5, 6}}) ||
      dec.evaluate() != dec.input) {
    ok = false;
    note = "C6 decomposition";
  }
  // C30-on-S49: pair over (leaf, self(pair(pair))) with the worked step kinds
  auto d30 = ds(30, 1, {{1, 2}, {1, 6}, {1, 10}, {7, 30}});
  auto dec30 = decompose(d30);
  auto is_pair = [](const DecompNode &n) { return n.kind == DecompNode::Kind::Pair; };
  bool shape = is_pair(*dec30.root) && dec30.root->child.size() == 2 &&
               dec30.root->child[0]->kind == DecompNode::Kind::Leaf &&
               dec30.root->child[1]->kind == DecompNode::Kind::Self &&
               is_pair(*dec30.root->child[1]->child[0]) &&
               dec30.evaluate() == dec30.input && dec30.handles_added == 0;
  if (shape) {
    const auto &inner = *dec30.root->child[1]->child[0];
    bool innerPairs = (inner.child[0]->kind == DecompNode::Kind::Pair &&
                       inner.child[1]->kind == DecompNode::Kind::Leaf) ||
                      (inner.child[1]->kind == DecompNode::Kind::Pair &&
                       inner.child[0]->kind == DecompNode::Kind::Leaf);
    shape = innerPairs;
  }
  if (!shape) {
    ok = false;
    note = "C30 tree shape";
  }
  // round-trips on every enumerated Type 2 set, n <= 10, g <= 6; geometric
  // rotations in the ambiguous degree-2 pattern and sub-theorem genera are
  // reported as unsupported, everything else must resolve
  int count = 0, lifted = 0, skipped = 0;
  for (i64 n = 2; n <= 10 && ok; ++n)
    for (i64 g = 0; g <= 6 && ok; ++g)
      for (const auto &d : enumerate_datasets(n, g)) {
        if (classify(d).kind != ActionKind::Type2) continue;
        ++count;
        try {
          auto dc = decompose(d);
          if (dc.handles_added) ++lifted;
          auto target = dc.handles_added ? compose_trivial_self(d, dc.handles_added) : d;
          if (dc.evaluate() != canonicalize(target)) {
            ok = false;
            note = "evaluation mismatch at " + d.str();
            break;
          }
        } catch (const Error &e) {
          if (e.name() == "UnsupportedCase") {
            ++skipped;
            continue;
          }
          ok = false;
          note = d.str() + ": " + e.what();
          break;
        }
      }
  report(8, "decompositions", ok,
         note.empty() ? std::to_string(count) + " Type 2 sets (" + std::to_string(lifted) +
                            " via added handles, " + std::to_string(skipped) + " rotational/low-genus)"
                      : note);
}

void criterion9() {
  bool ok = true;
  // direct substitutions covering every branch of the size formulas
  struct T1 { i64 n, g0, want; };
  std::vector<T1> singles = {
      {6, 1, 12}, {3, 2, 15}, {5, 1, 10}, {4, 3, 32}, {7, 2, 35},
      {8, 3, 64}, {9, 1, 18}, {10, 2, 50}, {12, 1, 24}, {11, 2, 55}};
  for (auto t : singles) {
    // synthesize a Type 1 set of the requested degree and quotient genus
    DataSet base;
    bool made = false;
    for (i64 g = 0; g <= 40 && !made; ++g)
      for (const auto &d : enumerate_datasets(t.n, g)) {
        if (classify(d).kind == ActionKind::Type1 && d.g0 == 0) {
          base = compose_trivial_self(d, t.g0);
          made = true;
          break;
        }
      }
    if (!made || reduction_system_size(base) != t.want) ok = false;
  }
  // pair branches: k = n/m with all six g0 combinations
  auto d1 = ds(6, 0, {{1, 2}, {1, 3}, {1, 6}});
  auto d2 = ds(6, 0, {{1, 2}, {2, 3}, {5, 6}});
  auto lift = [&](const DataSet &d, i64 k) { return k ? compose_trivial_self(d, k) : d; };
  struct TP { i64 h1, h2, want; };
  i64 k22 = 2;  // m = 3 compatibility
  std::vector<TP> pairs = {
      {0, 0, k22},
      {1, 1, k22},
      {0, 1, k22},
      {2, 0, 6 * (3 * 2 - 1) + k22},
      {0, 2, 6 * (3 * 2 - 1) + k22},
      {2, 1, 6 * (3 * 2 - 1) + k22 + 12},
      {1, 2, 6 * (3 * 2 - 1) + k22 + 12},
      {2, 2, 6 * (3 * 2 + 3 * 2 - 2) + k22},
      {3, 2, 6 * (3 * 3 + 3 * 2 - 2) + k22},
      {0, 3, 6 * (3 * 3 - 1) + k22},
      {1, 3, 6 * (3 * 3 - 1) + k22 + 12},
      {4, 4, 6 * (3 * 4 + 3 * 4 - 2) + k22}};
  for (auto t : pairs)
    if (reduction_system_size_pair(lift(d1, t.h1), lift(d2, t.h2), 2, 2) != t.want) ok = false;
  report(9, "reduction system sizes", ok, std::to_string(singles.size() + pairs.size()) + " tuples");
}

} // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << g_failures << " criteria failed\n";
  return g_failures;
}
