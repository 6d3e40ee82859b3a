#include "core/fatgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cyclact {

void FatGraph::validate() const {
  int N = n_directed();
  if ((int)sigma0.size() != N) fail("BadGraph", "sigma0 size mismatch");
  std::vector<char> seen(N, 0);
  for (int d = 0; d < N; ++d) {
    if (sigma0[d] < 0 || sigma0[d] >= N) fail("BadGraph", "sigma0 out of range");
    seen[sigma0[d]] = 1;
  }
  for (int d = 0; d < N; ++d)
    if (!seen[d]) fail("BadGraph", "sigma0 is not a permutation");
  for (const auto &v : fg_vertices(*this))
    if (v.size() < 3) fail("BadGraph", "vertex of valency < 3");
}

std::vector<std::vector<int>> fg_vertices(const FatGraph &g) {
  int N = g.n_directed();
  std::vector<char> vis(N, 0);
  std::vector<std::vector<int>> out;
  for (int d = 0; d < N; ++d) {
    if (vis[d]) continue;
    std::vector<int> cyc;
    int u = d;
    do {
      vis[u] = 1;
      cyc.push_back(u);
      u = g.sigma0[u];
    } while (u != d);
    out.push_back(cyc);
  }
  return out;
}

std::vector<std::vector<int>> boundary_components(const FatGraph &g) {
  int N = g.n_directed();
  std::vector<int> inv_sigma0(N);
  for (int d = 0; d < N; ++d) inv_sigma0[g.sigma0[d]] = d;
  std::vector<char> vis(N, 0);
  std::vector<std::vector<int>> out;
  for (int d = 0; d < N; ++d) {
    if (vis[d]) continue;
    std::vector<int> cyc;
    int u = d;
    do {
      vis[u] = 1;
      cyc.push_back(u);
      u = FatGraph::flip(inv_sigma0[u]);
    } while (u != d);
    out.push_back(cyc);
  }
  return out;
}

bool fg_connected(const FatGraph &g) {
  int N = g.n_directed();
  if (N == 0) return true;
  std::vector<char> vis(N, 0);
  std::vector<int> stk{0};
  vis[0] = 1;
  while (!stk.empty()) {
    int u = stk.back();
    stk.pop_back();
    for (int v : {g.sigma0[u], FatGraph::flip(u)})
      if (!vis[v]) { vis[v] = 1; stk.push_back(v); }
  }
  return std::all_of(vis.begin(), vis.end(), [](char c) { return c != 0; });
}

i64 graph_genus(const FatGraph &g) {
  if (!fg_connected(g)) fail("Disconnected", "graph is not connected");
  i64 V = (i64)fg_vertices(g).size();
  i64 E = g.n_undirected;
  i64 b = (i64)boundary_components(g).size();
  i64 twice = 2 - b - V + E;
  if (twice < 0 || twice % 2) fail("BadGraph", "inconsistent Euler data");
  return twice / 2;
}

FatGraph from_polygon(const SidePairedPolygon &p) {
  (void)quotient_genus(p);  // orientability check
  FatGraph g;
  g.n_undirected = p.n_letters;
  g.edge_names = p.letter_names;
  g.sigma0.assign(2 * p.n_letters, -1);
  std::map<int, int> pos;
  for (int i = 0; i < p.k; ++i) pos[p.word[i]] = i;
  auto dir_of = [&](int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; };
  for (int i = 0; i < p.k; ++i) {
    int x = p.word[i];
    // sigma0(x) = the side immediately after the occurrence of x^-1
    int after = p.word[(pos.at(-x) + 1) % p.k];
    g.sigma0[dir_of(x)] = dir_of(after);
  }
  g.validate();
  return g;
}

FatGraphMap automorphism_from_rotation(const SidePairedPolygon &p) {
  return automorphism_from_rotation(p, p.shift);
}

FatGraphMap automorphism_from_rotation(const SidePairedPolygon &p, int shift) {
  shift = (int)mod_norm(shift, p.k);
  FatGraphMap f;
  f.graph = from_polygon(p);
  (void)realized_data_set(p, shift);  // validates that the shift is an action
  std::map<int, int> pos;
  for (int i = 0; i < p.k; ++i) pos[p.word[i]] = i;
  auto dir_of = [&](int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; };
  f.map.assign(f.graph.n_directed(), -1);
  for (int i = 0; i < p.k; ++i) {
    int x = p.word[i];
    f.map[dir_of(x)] = dir_of(p.word[(i + shift) % p.k]);
  }
  check_automorphism(f);
  return f;
}

void check_automorphism(const FatGraphMap &f) {
  const auto &g = f.graph;
  int N = g.n_directed();
  if ((int)f.map.size() != N) fail("NotAnAction", "map size mismatch");
  std::vector<char> seen(N, 0);
  for (int d = 0; d < N; ++d) {
    int v = f.map[d];
    if (v < 0 || v >= N || seen[v]) fail("NotAnAction", "map is not a bijection");
    seen[v] = 1;
  }
  for (int d = 0; d < N; ++d) {
    if (f.map[FatGraph::flip(d)] != FatGraph::flip(f.map[d]))
      fail("NotAnAction", "map does not commute with sigma1");
    if (f.map[g.sigma0[d]] != g.sigma0[f.map[d]])
      fail("NotAnAction", "map does not commute with sigma0");
  }
}

i64 map_order(const FatGraphMap &f) {
  int N = f.graph.n_directed();
  std::vector<int> cur(N);
  std::iota(cur.begin(), cur.end(), 0);
  for (i64 k = 1; k <= 4 * (i64)N + 4; ++k) {
    for (int d = 0; d < N; ++d) cur[d] = f.map[cur[d]];
    bool ident = true;
    for (int d = 0; d < N; ++d)
      if (cur[d] != d) { ident = false; break; }
    if (ident) return k;
  }
  fail("Internal", "automorphism order not found");
}

// orbits of the induced action on sigma0 cycles
static std::vector<std::vector<int>> vertex_orbits(const FatGraphMap &f,
                                                   const std::vector<std::vector<int>> &verts) {
  std::vector<int> cyc_of(f.graph.n_directed());
  for (int i = 0; i < (int)verts.size(); ++i)
    for (int d : verts[i]) cyc_of[d] = i;
  std::vector<char> done(verts.size(), 0);
  std::vector<std::vector<int>> orbits;
  for (int i = 0; i < (int)verts.size(); ++i) {
    if (done[i]) continue;
    std::vector<int> orb;
    int j = i;
    do {
      done[j] = 1;
      orb.push_back(j);
      j = cyc_of[f.map[verts[j][0]]];
    } while (j != i);
    orbits.push_back(orb);
  }
  return orbits;
}

bool is_irreducible(const FatGraphMap &f, i64 n) {
  const auto &g = f.graph;
  if (boundary_components(g).size() != 1) return false;
  i64 E = g.n_directed();
  auto orbits = vertex_orbits(f, fg_vertices(g));
  if (E == n) return orbits.size() == 1;
  if (E == 2 * n) return orbits.size() == 2;
  return false;
}

DataSet dataset_from_automorphism(const FatGraphMap &f) {
  check_automorphism(f);
  const auto &g = f.graph;
  auto bnd = boundary_components(g);
  if (bnd.size() != 1) fail("NotIrreducible", "recovery needs a single boundary component");
  i64 n = map_order(f);
  std::vector<ConePoint> cones;
  if (n > 1) {
    // boundary rotation measured along Q = sigma0 . sigma1
    const int L = (int)g.n_directed();
    std::vector<int> seq;
    seq.reserve(L);
    int u = 0;
    for (int i = 0; i < L; ++i) {
      seq.push_back(u);
      u = g.sigma0[FatGraph::flip(u)];
    }
    auto it = std::find(seq.begin(), seq.end(), f.map[seq[0]]);
    if (it == seq.end()) fail("Internal", "image not on the boundary orbit");
    i64 t = it - seq.begin();
    i64 num = checked_mul(t, n);
    if (num % L != 0) fail("Internal", "bad boundary rotation fraction");
    i64 cinv = mod_norm(num / L, n);
    cones.push_back({mod_inverse(cinv, n), n});
  }
  auto verts = fg_vertices(g);
  for (const auto &orb : vertex_orbits(f, verts)) {
    i64 b = (i64)orb.size();
    i64 ni = n / b;
    if (ni <= 1) continue;
    const auto &cyc = verts[orb[0]];
    i64 L = (i64)cyc.size();
    // steps of F^b against sigma0^{-1}
    int x = cyc[0];
    for (i64 tt = 0; tt < b; ++tt) x = f.map[x];
    i64 fsteps = -1;
    int u = cyc[0];
    for (i64 s = 0; s < L; ++s) {
      if (u == x) { fsteps = s; break; }
      // step along sigma0^{-1}
      int prev = -1;
      for (int d : cyc)
        if (g.sigma0[d] == u) { prev = d; break; }
      u = prev;
    }
    if (fsteps < 0) fail("Internal", "stabilizer does not preserve the vertex cycle");
    i64 num = checked_mul(fsteps, ni);
    if (num % L != 0) fail("Internal", "bad corner rotation fraction");
    i64 cinv = mod_norm(num / L, ni);
    cones.push_back({mod_inverse(cinv, ni), ni});
  }
  // undirected edge orbits with reversal
  std::vector<char> edone(g.n_undirected, 0);
  for (int e = 0; e < g.n_undirected; ++e) {
    if (edone[e]) continue;
    i64 b = 0;
    int d = 2 * e;
    while (true) {
      int rep = d >> 1;
      if (edone[rep]) break;
      edone[rep] = 1;
      ++b;
      d = f.map[d];
    }
    int img = 2 * e;
    for (i64 tt = 0; tt < b; ++tt) img = f.map[img];
    if (img == FatGraph::flip(2 * e)) cones.push_back({1, 2});
  }
  std::sort(cones.begin(), cones.end());
  i64 gg = graph_genus(g);
  i64 rhs = 2 - 2 * gg;
  for (auto &cp : cones) rhs += n - n / cp.n;
  i64 twice_g0 = 2 * n - rhs;
  if (twice_g0 % (2 * n) != 0 || twice_g0 < 0) fail("Internal", "non-integral quotient genus");
  return make_dataset(n, twice_g0 / (2 * n), 0, cones);
}

// ---- compatible gluing ----

namespace {

struct TruncInfo {
  std::vector<int> arc_after;  // per position: arc index following it, or -1
  int base_side = -1;
};

// classify each vertex class of p by the cone point it realizes
// (order+residue); returns per-class ConePoint with n=1 for free classes
std::vector<ConePoint> class_cones(const SidePairedPolygon &p,
                                   const std::vector<std::vector<int>> &classes) {
  int k = p.k;
  i64 n = p.n;
  std::vector<int> cls_of(k, -1);
  for (int i = 0; i < (int)classes.size(); ++i)
    for (int v : classes[i]) cls_of[v] = i;
  std::vector<ConePoint> out(classes.size(), ConePoint{0, 1});
  // corner cycles grouped per class, as in realized_data_set
  std::vector<int> nxt(k);
  for (int v = 0; v < k; ++v) nxt[v] = p.pairing[(v - 1 + k) % k];
  std::vector<char> seen(k, 0);
  for (int v0 = 0; v0 < k; ++v0) {
    if (seen[v0]) continue;
    std::vector<int> cyc;
    int u = v0;
    do {
      seen[u] = 1;
      cyc.push_back(u);
      u = nxt[u];
    } while (u != v0);
    // orbit size of this class under the rotation
    std::set<int> orbit_roots;
    int w = cyc[0];
    i64 b = 0;
    std::set<int> hit;
    while (!hit.count(cls_of[w])) {
      hit.insert(cls_of[w]);
      ++b;
      w = (w + p.shift) % k;
    }
    i64 ni = n / b;
    if (ni > 1) {
      i64 L = (i64)cyc.size();
      int tgt = (int)mod_norm(cyc[0] + b * p.shift, k);
      auto it = std::find(cyc.begin(), cyc.end(), tgt);
      if (it == cyc.end()) fail("Internal", "bad stabilizer");
      i64 num = checked_mul((i64)(it - cyc.begin()), ni);
      if (num % L) fail("Internal", "bad rotation fraction");
      out[cls_of[cyc[0]]] = ConePoint{mod_inverse(mod_norm(num / L, ni), ni), ni};
    }
  }
  return out;
}

} // namespace

GluedPair glue_compatible(const SidePairedPolygon &p1, const SidePairedPolygon &p2,
                          int cone1, int cone2) {
  if (p1.n != p2.n) fail("DegreeMismatch", "gluing needs equal degrees");
  i64 n = p1.n;
  auto cp1 = p1.source.cones.at(cone1 - 1);
  auto cp2 = p2.source.cones.at(cone2 - 1);
  if (cp1.n != cp2.n || mod_norm(cp1.c + cp2.c, cp1.n) != 0)
    fail("NotCompatible", "cones are not a compatible pair");
  i64 m = cp1.n;
  i64 A = n / m;

  // locate one rotation orbit of vertex classes realizing each cone
  auto classes1 = vertex_classes(p1), classes2 = vertex_classes(p2);
  auto cc1 = class_cones(p1, classes1), cc2 = class_cones(p2, classes2);
  auto truncated = [&](const SidePairedPolygon &p, const std::vector<std::vector<int>> &classes,
                       const std::vector<ConePoint> &cc, ConePoint target) {
    std::vector<int> cls_of(p.k, -1);
    for (int i = 0; i < (int)classes.size(); ++i)
      for (int v : classes[i]) cls_of[v] = i;
    std::vector<int> orbit_of(classes.size(), -1);
    int norb = 0;
    for (int i = 0; i < (int)classes.size(); ++i) {
      if (orbit_of[i] >= 0) continue;
      int j = i;
      do {
        orbit_of[j] = norb;
        j = cls_of[(classes[j][0] + p.shift) % p.k];
      } while (j != i);
      ++norb;
    }
    int pick = -1;
    for (int i = 0; i < (int)classes.size() && pick < 0; ++i)
      if (cc[i] == target) pick = orbit_of[i];
    if (pick < 0)
      fail("UnsupportedCase", "compatibility is not carried by vertex classes");
    std::vector<char> trunc_vertex(p.k, 0);
    i64 found = 0;
    for (int i = 0; i < (int)classes.size(); ++i)
      if (orbit_of[i] == pick) {
        ++found;
        for (int v : classes[i]) trunc_vertex[v] = 1;
      }
    if (found != A) fail("Internal", "orbit size does not match A(D1,D2)");
    return trunc_vertex;
  };
  auto tv1 = truncated(p1, classes1, cc1, cp1);
  auto tv2 = truncated(p2, classes2, cc2, cp2);

  // arcs follow sides whose head vertex is truncated; arc t follows
  // F^t(base side)
  auto arcs_for = [&](const SidePairedPolygon &p, const std::vector<char> &tv) {
    TruncInfo ti;
    ti.arc_after.assign(p.k, -1);
    for (int pos = 0; pos < p.k; ++pos)
      if (tv[(pos + 1) % p.k]) { ti.base_side = pos; break; }
    if (ti.base_side < 0) fail("Internal", "no truncated corner");
    for (i64 t = 0; t < n; ++t) {
      int side = (int)mod_norm(ti.base_side + t * p.shift, p.k);
      if (!tv[(side + 1) % p.k]) fail("Internal", "arc orbit left the truncated set");
      if (ti.arc_after[side] != -1) fail("Internal", "arc orbit not free");
      ti.arc_after[side] = (int)t;
    }
    for (int pos = 0; pos < p.k; ++pos)
      if (tv[(pos + 1) % p.k] != (ti.arc_after[pos] >= 0))
        fail("Internal", "arc orbit does not cover the truncated corners");
    return ti;
  };
  auto ti1 = arcs_for(p1, tv1), ti2 = arcs_for(p2, tv2);

  GluedPair out;
  out.orbit_size = A;
  out.n_letters1 = p1.n_letters;
  out.n_letters2 = p2.n_letters;
  out.n_arcs = (int)n;
  FatGraph &g = out.graph;
  g.n_undirected = p1.n_letters + p2.n_letters + (int)n;
  for (auto &nm : p1.letter_names) g.edge_names.push_back("1." + nm);
  for (auto &nm : p2.letter_names) g.edge_names.push_back("2." + nm);
  for (i64 t = 0; t < n; ++t) g.edge_names.push_back("c" + std::to_string(t));

  auto dir1 = [&](int lit) { return lit > 0 ? 2 * (lit - 1) : 2 * (-lit - 1) + 1; };
  auto dir2 = [&](int lit) {
    int base = p1.n_letters;
    return lit > 0 ? 2 * (base + lit - 1) : 2 * (base - lit - 1) + 1;
  };
  auto dira = [&](int t, bool pos) {
    int base = p1.n_letters + p2.n_letters;
    return 2 * (base + t) + (pos ? 0 : 1);
  };

  // truncated boundary faces: P1 arcs positive, P2 arcs inverted
  std::vector<int> b1, b2;
  for (int pos = 0; pos < p1.k; ++pos) {
    b1.push_back(dir1(p1.word[pos]));
    if (ti1.arc_after[pos] >= 0) b1.push_back(dira(ti1.arc_after[pos], true));
  }
  for (int pos = 0; pos < p2.k; ++pos) {
    b2.push_back(dir2(p2.word[pos]));
    if (ti2.arc_after[pos] >= 0) b2.push_back(dira(ti2.arc_after[pos], false));
  }
  out.faces = {b1, b2};

  // sigma0 from the two boundary words: sigma0(x) = edge after x^-1
  std::map<int, int> at;  // directed edge -> (face, idx) encoded
  for (int i = 0; i < (int)b1.size(); ++i) at[b1[i]] = i;
  for (int i = 0; i < (int)b2.size(); ++i) at[b2[i]] = (1 << 24) + i;
  auto next_of = [&](int d) {
    auto it = at.find(d);
    if (it == at.end()) fail("Internal", "edge missing from boundaries");
    int code = it->second;
    if (code < (1 << 24)) return b1[(code + 1) % b1.size()];
    return b2[((code - (1 << 24)) + 1) % b2.size()];
  };
  g.sigma0.assign(g.n_directed(), -1);
  for (int d = 0; d < g.n_directed(); ++d) g.sigma0[d] = next_of(FatGraph::flip(d));
  g.validate();

  // automorphism: letters rotate, arc t -> t+1
  auto perm1 = rotation_action(p1), perm2 = rotation_action(p2);
  out.automorphism.assign(g.n_directed(), -1);
  for (int lit = 1; lit <= p1.n_letters; ++lit) {
    out.automorphism[dir1(lit)] = dir1(perm1.apply(lit));
    out.automorphism[dir1(-lit)] = dir1(-perm1.apply(lit));
  }
  for (int lit = 1; lit <= p2.n_letters; ++lit) {
    out.automorphism[dir2(lit)] = dir2(perm2.apply(lit));
    out.automorphism[dir2(-lit)] = dir2(-perm2.apply(lit));
  }
  for (i64 t = 0; t < n; ++t) {
    out.automorphism[dira((int)t, true)] = dira((int)((t + 1) % n), true);
    out.automorphism[dira((int)t, false)] = dira((int)((t + 1) % n), false);
  }
  FatGraphMap fm{g, out.automorphism};
  check_automorphism(fm);

  // arc circles: follow positive arcs head-to-tail
  auto verts = fg_vertices(g);
  std::vector<int> vert_of(g.n_directed());
  for (int i = 0; i < (int)verts.size(); ++i)
    for (int d : verts[i]) vert_of[d] = i;
  auto head = [&](int d) { return vert_of[FatGraph::flip(d)]; };
  std::map<int, int> arc_at_tail;  // vertex -> positive arc directed id
  for (i64 t = 0; t < n; ++t) {
    int d = dira((int)t, true);
    if (arc_at_tail.count(vert_of[d])) fail("Internal", "two arcs at one vertex");
    arc_at_tail[vert_of[d]] = d;
  }
  std::set<int> used;
  for (i64 t = 0; t < n; ++t) {
    int d = dira((int)t, true);
    if (used.count(d)) continue;
    std::vector<int> cyc;
    int u = d;
    do {
      used.insert(u);
      cyc.push_back(u);
      auto it = arc_at_tail.find(head(u));
      if (it == arc_at_tail.end()) fail("Internal", "broken arc circle");
      u = it->second;
    } while (u != d);
    out.circles.push_back(cyc);
  }
  if ((i64)out.circles.size() != A) fail("Internal", "unexpected number of arc circles");
  return out;
}

GluedPair glue_compatible(const DataSet &a, const DataSet &b, int r, int s) {
  if (!pair_compatible(a, b, r, s)) fail("NotCompatible", "not an (r,s)-compatible pair");
  if (classify(a).kind != ActionKind::Type1 || classify(b).kind != ActionKind::Type1 ||
      canonicalize(a).g0 != 0 || canonicalize(b).g0 != 0)
    fail("UnsupportedCase", "gluing implemented for irreducible Type 1 constituents");
  auto pa = build_polygon(a);
  auto pb = build_polygon(b);
  auto locate = [](const SidePairedPolygon &p, ConePoint cp) {
    for (int i = 0; i < 2; ++i)
      if (p.source.cones[i] == cp) return i + 1;
    if (p.source.cones[2] == cp) return 3;
    fail("Internal", "cone not found after reordering");
  };
  int c1 = locate(pa, canonicalize(a).cones[r - 1]);
  int c2 = locate(pb, canonicalize(b).cones[s - 1]);
  return glue_compatible(pa, pb, c1, c2);
}

} // namespace cyclact
