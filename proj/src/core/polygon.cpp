#include "core/polygon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace cyclact {

static SidePairedPolygon build_from(const DataSet &ordered) {
  const auto &cs = ordered.cones;
  i64 n = ordered.n;
  i64 c2 = cs[1].c, n2 = cs[1].n, c3 = cs[2].c;
  i64 g0 = ordered.g0;
  if (cs[2].n != n) fail("NotType1", "third cone point must have full order");

  SidePairedPolygon p;
  p.n = n;
  p.source = ordered;
  i64 c3i = mod_inverse(c3, n);
  i64 q = mod_norm((n / n2) * c3i, n);
  i64 j = mod_norm(n2 - c2, n2);
  bool two = (cs[0].n == 2 || cs[1].n == 2);
  p.family2n = !two;

  int na = two ? (int)n : (int)(2 * n);          // number of a-sides
  int block = (int)(4 * g0) + (two ? 1 : 2);     // sides per rotation block
  p.k = (int)(n * block);
  p.word.assign(p.k, 0);
  p.pairing.assign(p.k, -1);

  // position layout: block i (0..n-1) = [Q_i (4 g0 sides)] [a-sides]
  auto apos = [&](i64 ai) {  // a-index 0..na-1 -> absolute position
    i64 blk = two ? ai : ai / 2;
    i64 off = two ? 0 : ai % 2;
    return (int)(blk * block + 4 * g0 + off);
  };

  // a-side pairing per Def of the polygon data set
  std::vector<int> apair(na, -1);
  if (!two) {
    for (i64 m = 0; m < n; ++m) {
      i64 z = mod_norm(m + q * j, n);
      int u = (int)(2 * m + 1), v = (int)mod_norm(2 * z, 2 * n);
      apair[u] = v;
      apair[v] = u;
    }
  } else {
    for (i64 m = 0; m < n; ++m) {
      int u = (int)m, v = (int)mod_norm(m + q * j - 1, n);
      apair[u] = v;
    }
    for (int u = 0; u < na; ++u)
      if (apair[apair[u]] != u)
        fail("NotType1", "side pairing is not an involution; reorder cone points");
  }
  for (int u = 0; u < na; ++u) {
    if (apair[u] == u) fail("NotType1", "side paired with itself");
    p.pairing[apos(u)] = apos(apair[u]);
  }
  // commutator blocks Q_i = prod_s [x_{i,s}, y_{i,s}]
  for (i64 i = 0; i < n; ++i)
    for (i64 s = 0; s < g0; ++s) {
      int base = (int)(i * block + 4 * s);
      p.pairing[base] = base + 2;
      p.pairing[base + 2] = base;
      p.pairing[base + 1] = base + 3;
      p.pairing[base + 3] = base + 1;
    }

  // letters named by representative (smaller) position within the pair;
  // a-letters keep the paper's position-based names a0,a1,...
  std::map<int, int> lid;
  for (int pos = 0; pos < p.k; ++pos) {
    int rep = std::min(pos, p.pairing[pos]);
    if (pos == rep) {
      int id = (int)p.letter_names.size() + 1;
      lid[rep] = id;
      i64 blk = pos / block, off = pos % block;
      std::string nm;
      if (off >= 4 * g0) {
        i64 ai = two ? blk : 2 * blk + (off - 4 * g0);
        nm = "a" + std::to_string(ai);
      } else {
        // rep positions inside Q blocks are the x/y slots (off % 4 in {0,1})
        nm = std::string((off % 2) ? "y" : "x") + std::to_string(blk) + "_" +
             std::to_string(off / 4 + 1);
      }
      p.letter_names.push_back(nm);
      p.word[pos] = id;
    } else {
      p.word[pos] = -lid.at(rep);
    }
  }
  p.n_letters = (int)p.letter_names.size();

  // rotation by c3^{-1} blocks of `block` sides each
  p.shift = (int)mod_norm(c3i * block, p.k);
  for (int pos = 0; pos < p.k; ++pos)
    if (p.pairing[(pos + p.shift) % p.k] != (p.pairing[pos] + p.shift) % p.k)
      fail("Internal", "rotation does not respect the side pairing");
  return p;
}

SidePairedPolygon build_polygon_ordered(const DataSet &d) {
  if (classify(d).kind != ActionKind::Type1) fail("NotType1", "polygon construction needs a Type 1 data set");
  if (d.ell() != 3 || d.cones[2].n != d.n) fail("NotType1", "cone order: third cone must have full order");
  return build_from(d);
}

SidePairedPolygon build_polygon(const DataSet &d) {
  if (classify(d).kind != ActionKind::Type1) fail("NotType1", "polygon construction needs a Type 1 data set");
  DataSet o = canonicalize(d);
  // third slot: a full-order cone; among candidates prefer the value with
  // the highest multiplicity in the cone list (the paper's worked polygons
  // follow this choice), ties resolved towards the last in canonical order.
  // An order-2 cone, when present alone, goes first (the n-family formula
  // is an involution only in that order).
  int full = -1;
  i64 best_mult = -1;
  for (int i = 0; i < 3; ++i) {
    if (o.cones[i].n != o.n) continue;
    i64 mult = std::count(o.cones.begin(), o.cones.end(), o.cones[i]);
    if (mult >= best_mult) {
      best_mult = mult;
      full = i;
    }
  }
  std::vector<ConePoint> cs;
  for (int i = 0; i < 3; ++i)
    if (i != full) cs.push_back(o.cones[i]);
  cs.push_back(o.cones[full]);
  if (cs[1].n == 2 && cs[0].n != 2) std::swap(cs[0], cs[1]);
  DataSet ordered = o;
  ordered.cones = cs;
  return build_from(ordered);
}

static std::vector<int> vertex_partition(const SidePairedPolygon &p) {
  int k = p.k;
  std::vector<int> par(k);
  std::iota(par.begin(), par.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (par[x] != x) { par[x] = par[par[x]]; x = par[x]; }
    return x;
  };
  auto uni = [&](int a, int b) { par[find(a)] = find(b); };
  for (int pos = 0; pos < k; ++pos) {
    int q = p.pairing[pos];
    uni(pos, (q + 1) % k);
    uni((pos + 1) % k, q);
  }
  std::vector<int> cls(k);
  for (int v = 0; v < k; ++v) cls[v] = find(v);
  return cls;
}

std::vector<std::vector<int>> vertex_classes(const SidePairedPolygon &p) {
  auto cls = vertex_partition(p);
  std::map<int, std::vector<int>> by;
  for (int v = 0; v < p.k; ++v) by[cls[v]].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto &[root, vs] : by) out.push_back(vs);
  return out;
}

i64 quotient_genus(const SidePairedPolygon &p) {
  // orientability: each letter once per sign
  std::map<int, std::pair<int, int>> occ;
  for (int x : p.word) (x > 0 ? occ[x].first : occ[-x].second)++;
  for (auto &[id, pr] : occ)
    if (pr.first != 1 || pr.second != 1)
      fail("NonOrientablePairing", "side pairing preserves orientation on some side");
  i64 V = (i64)vertex_classes(p).size();
  i64 E = p.k / 2;
  i64 chi = V - E + 1;
  if ((2 - chi) % 2 != 0 || chi > 2) fail("Internal", "bad Euler characteristic");
  return (2 - chi) / 2;
}

static void check_shift(const SidePairedPolygon &p, int shift) {
  shift = (int)mod_norm(shift, p.k);
  for (int pos = 0; pos < p.k; ++pos)
    if (p.pairing[(pos + shift) % p.k] != (p.pairing[pos] + shift) % p.k)
      fail("NotAnAction", "rotation does not respect the side pairing");
}

SignedPerm rotation_action(const SidePairedPolygon &p) {
  check_shift(p, p.shift);
  SignedPerm perm;
  perm.image.assign(p.n_letters, 0);
  std::map<int, int> pos;
  for (int i = 0; i < p.k; ++i) pos[p.word[i]] = i;
  for (int id = 1; id <= p.n_letters; ++id) {
    int at = pos.at(id);
    perm.image[id - 1] = p.word[(at + p.shift) % p.k];
  }
  return perm;
}

i64 rotation_order(const SidePairedPolygon &p, int shift) {
  shift = (int)mod_norm(shift, p.k);
  if (shift == 0) return 1;
  return p.k / std::gcd((i64)shift, (i64)p.k);
}

DataSet realized_data_set(const SidePairedPolygon &p) { return realized_data_set(p, p.shift); }

DataSet realized_data_set(const SidePairedPolygon &p, int shift) {
  shift = (int)mod_norm(shift, p.k);
  check_shift(p, shift);
  int k = p.k;
  i64 n = rotation_order(p, shift);
  std::vector<ConePoint> cones;
  if (n > 1) {
    // center: rotation by shift/k of a turn
    i64 cinv = checked_mul((i64)shift, n);
    if (cinv % k != 0) fail("Internal", "bad center rotation fraction");
    cinv = mod_norm(cinv / k, n);
    cones.push_back({mod_inverse(cinv, n), n});
  }
  // corner cycles: next corner around a vertex = pairing[p-1]
  std::vector<int> nxt(k), cyc_of(k, -1);
  for (int v = 0; v < k; ++v) nxt[v] = p.pairing[(v - 1 + k) % k];
  std::vector<std::vector<int>> cycles;
  for (int v = 0; v < k; ++v) {
    if (cyc_of[v] >= 0) continue;
    std::vector<int> cyc;
    int u = v;
    do {
      cyc_of[u] = (int)cycles.size();
      cyc.push_back(u);
      u = nxt[u];
    } while (u != v);
    cycles.push_back(cyc);
  }
  std::vector<char> done(cycles.size(), 0);
  for (size_t i = 0; i < cycles.size(); ++i) {
    if (done[i]) continue;
    i64 b = 0;
    size_t j = i;
    do {
      done[j] = 1;
      ++b;
      j = (size_t)cyc_of[(cycles[j][0] + shift) % k];
    } while (j != i);
    i64 ni = n / b;
    if (ni > 1) {
      const auto &cyc = cycles[i];
      i64 L = (i64)cyc.size();
      int tgt = (int)mod_norm(cyc[0] + b * shift, k);
      auto it = std::find(cyc.begin(), cyc.end(), tgt);
      if (it == cyc.end()) fail("Internal", "stabilizer does not preserve corner cycle");
      i64 d = it - cyc.begin();
      i64 num = checked_mul(d, ni);
      if (num % L != 0) fail("Internal", "bad corner rotation fraction");
      i64 cinv = mod_norm(num / L, ni);
      cones.push_back({mod_inverse(cinv, ni), ni});
    }
  }
  // edge midpoints: orbits of undirected sides where the stabilizer reverses
  std::vector<char> edone(k, 0);
  for (int pos = 0; pos < k; ++pos) {
    if (edone[pos] || p.pairing[pos] < pos) continue;
    std::vector<int> orb;
    int u = pos;
    while (true) {
      int rep = std::min(u, p.pairing[u]);
      if (edone[rep]) break;
      edone[rep] = 1;
      orb.push_back(rep);
      u = (u + shift) % k;
    }
    i64 b = (i64)orb.size();
    if ((pos + b * shift) % k == p.pairing[pos]) {
      if (n % (2 * b) != 0 || n / b != 2) fail("Internal", "side-reversing stabilizer of order != 2");
      cones.push_back({1, 2});
    }
  }
  std::sort(cones.begin(), cones.end());
  // g0 from Riemann-Hurwitz: 2 - 2g0 = (2-2g)/n + sum(1 - 1/ni)
  i64 g = quotient_genus(p);
  // work over 2*n*prod: use exact: 2n - 2n g0 = (2-2g) + n*sum(1-1/ni)
  i64 rhs = 2 - 2 * g;
  for (auto &cp : cones) rhs += n - n / cp.n;
  i64 twice_g0 = 2 * n - rhs;
  if (twice_g0 % (2 * n) != 0 || twice_g0 < 0) fail("Internal", "non-integral quotient genus");
  i64 g0 = twice_g0 / (2 * n);
  return make_dataset(n, g0, 0, cones);
}

Normalized normalize_polygon(const SidePairedPolygon &p) {
  return normalize_full(p.word, p.n_letters, p.family2n);
}

} // namespace cyclact
