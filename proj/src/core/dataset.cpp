#include "core/dataset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace cyclact {

std::string DataSet::str() const {
  std::ostringstream os;
  os << "(" << n << "," << g0;
  if (r != 0) os << "," << r;
  os << ";";
  for (size_t i = 0; i < cones.size(); ++i) {
    if (i) os << ",";
    os << "(" << cones[i].c << "," << cones[i].n << ")";
  }
  os << ")";
  return os.str();
}

DataSet canonicalize(DataSet d) {
  std::sort(d.cones.begin(), d.cones.end());
  return d;
}

// 2g = 2 + 2n(g0-1) + sum(n - n/n_j); returns nullopt when not a
// nonnegative integer.
static std::optional<i64> genus_opt(i64 n, i64 g0, const std::vector<ConePoint> &cones) {
  i64 twice = checked_add(2, checked_mul(2 * n, g0 - 1));
  for (const auto &cp : cones) {
    if (cp.n <= 0 || n % cp.n != 0) return std::nullopt;
    twice = checked_add(twice, n - n / cp.n);
  }
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

ValidationReport validate(i64 n, i64 g0, i64 r, const std::vector<ConePoint> &cones) {
  ValidationReport rep;
  auto issue = [&rep](std::string code, std::string which, std::string detail) {
    rep.issues.push_back({std::move(code), std::move(which), std::move(detail)});
  };
  if (n < 1) issue("ConditionViolated", "i", "degree must be >= 1");
  if (g0 < 0) issue("ConditionViolated", "i", "orbifold genus must be >= 0");
  if (n >= 1 && (r < 0 || r >= n)) issue("ConditionViolated", "i", "r out of range");

  bool ell0 = cones.empty();
  // (i): r>0 iff l=0. The identity action (1,g,0;) is accepted: no positive
  // residue coprime to 1 exists, so the free slot degenerates.
  if (n == 1) {
    if (r != 0 || !ell0) issue("ConditionViolated", "i", "degree 1 admits only (1,g,0;)");
  } else if ((r > 0) != ell0) {
    issue("ConditionViolated", "i", "r > 0 must hold exactly when there are no cone points");
  }
  if (r > 0 && n > 1 && std::gcd(r, n) != 1)
    issue("ConditionViolated", "i", "gcd(r,n) != 1");

  i64 sum = 0;
  for (size_t i = 0; i < cones.size(); ++i) {
    const auto &cp = cones[i];
    if (cp.n < 2 || n % cp.n != 0) {
      issue("ConditionViolated", "ii", "cone order " + std::to_string(cp.n) + " does not divide " + std::to_string(n));
      continue;
    }
    if (cp.c < 1 || cp.c >= cp.n || std::gcd(cp.c, cp.n) != 1) {
      issue("ConditionViolated", "iii", "residue " + std::to_string(cp.c) + " not a unit mod " + std::to_string(cp.n));
      continue;
    }
    sum = checked_add(sum, checked_mul(n / cp.n, cp.c));
  }
  if (rep.issues.empty() && n > 0 && mod_norm(sum, n) != 0)
    issue("ConditionViolated", "iv", "sum (n/n_j) c_j = " + std::to_string(mod_norm(sum, n)) + " mod " + std::to_string(n));

  if (rep.issues.empty()) {
    i64 twice = checked_add(2, checked_mul(2 * n, g0 - 1));
    for (const auto &cp : cones) twice = checked_add(twice, n - n / cp.n);
    if (twice % 2 != 0)
      issue("NonIntegralGenus", "", "Riemann-Hurwitz genus is not an integer");
    else if (twice < 0)
      issue("NegativeGenus", "", "Riemann-Hurwitz genus is negative");
    else
      rep.genus = twice / 2;
  }

  if (rep.issues.empty()) {
    rep.valid = true;
    DataSet d{n, g0, r, cones};
    rep.dataset = canonicalize(d);
    // ambiguous rotational pattern: for n=2, Def 2.3(i) pins k=1 <=> n>2,
    // leaving the single-pair n=2 case outside the rotational class.
    if (n == 2 && cones.size() == 2) rep.warnings.push_back("rotational-pattern-ambiguous-n2");
  }
  return rep;
}

DataSet make_dataset(i64 n, i64 g0, i64 r, std::vector<ConePoint> cones) {
  auto rep = validate(n, g0, r, cones);
  if (!rep.valid) {
    const auto &is = rep.issues.front();
    fail(is.code + (is.which.empty() ? "" : "(" + is.which + ")"), is.detail);
  }
  return *rep.dataset;
}

i64 genus(const DataSet &d) {
  auto g = genus_opt(d.n, d.g0, d.cones);
  if (!g) fail("NonIntegralGenus", "invalid data set");
  return *g;
}

ActionClass classify(const DataSet &d) {
  if (d.r != 0 || d.n == 1) return {ActionKind::Rotational, false};
  // k-pair pattern: 2k cone points of full order, residues {s, n-s} with
  // equal multiplicity, k=1 iff n>2
  i64 l = d.ell();
  bool rot = false;
  if (l >= 2 && l % 2 == 0) {
    bool all_full = std::all_of(d.cones.begin(), d.cones.end(),
                                [&](const ConePoint &cp) { return cp.n == d.n; });
    if (all_full) {
      std::map<i64, i64> mult;
      for (const auto &cp : d.cones) mult[cp.c]++;
      i64 k = l / 2;
      if (mult.size() == 2) {
        auto it = mult.begin();
        auto [s, m1] = *it;
        auto [t, m2] = *std::next(it);
        rot = (m1 == m2 && mod_norm(s + t, d.n) == 0);
      } else if (mult.size() == 1 && d.n == 2) {
        rot = true;  // pairs (1,2),(1,2)
      }
      if (rot && !((k == 1) == (d.n > 2))) rot = false;
    }
  }
  if (rot) return {ActionKind::Rotational, false};
  bool full = std::any_of(d.cones.begin(), d.cones.end(),
                          [&](const ConePoint &cp) { return cp.n == d.n; });
  ActionKind kind = (l == 3 && full) ? ActionKind::Type1 : ActionKind::Type2;
  bool irr = (l == 3 && d.g0 == 0);
  return {kind, kind != ActionKind::Rotational && irr};
}

std::vector<std::pair<int, int>> self_compatible_indices(const DataSet &d) {
  if (d.ell() < 4) fail("PreconditionViolated", "self compatibility needs at least 4 cone points");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < d.ell(); ++i)
    for (int j = i + 1; j < d.ell(); ++j)
      if (d.cones[i].n == d.cones[j].n &&
          mod_norm(d.cones[i].c + d.cones[j].c, d.cones[i].n) == 0)
        out.push_back({i + 1, j + 1});
  return out;
}

static void check_index(const DataSet &d, int r) {
  if (r < 1 || r > d.ell()) fail("IndexOutOfRange", "cone index out of range");
}

DataSet compose_self(const DataSet &d, int r, int s) {
  check_index(d, r);
  check_index(d, s);
  if (r >= s) fail("NotCompatible", "need r < s");
  if (d.ell() < 4) fail("NotCompatible", "self compatibility needs at least 4 cone points");
  const auto &cr = d.cones[r - 1], &cs = d.cones[s - 1];
  if (cr.n != cs.n || mod_norm(cr.c + cs.c, cr.n) != 0)
    fail("NotCompatible", "indices are not self compatible");
  DataSet out;
  out.n = d.n;
  out.g0 = d.g0 + 1;
  out.r = 0;
  for (int i = 0; i < d.ell(); ++i)
    if (i != r - 1 && i != s - 1) out.cones.push_back(d.cones[i]);
  out = canonicalize(out);
  (void)genus(out);
  return out;
}

DataSet compose_trivial_self(const DataSet &d, i64 gprime) {
  if (gprime < 1) fail("PreconditionViolated", "g' must be positive");
  DataSet out = d;
  out.g0 += gprime;
  return canonicalize(out);
}

std::pair<DataSet, i64> strip_trivial_handles(const DataSet &d) {
  if (classify(d).kind != ActionKind::Type1) fail("NotType1", "strip needs a Type 1 data set");
  DataSet out = d;
  i64 g0 = d.g0;
  out.g0 = 0;
  return {canonicalize(out), g0};
}

bool pair_compatible(const DataSet &a, const DataSet &b, int r, int s) {
  if (a.n != b.n) return false;
  if (r < 1 || r > a.ell() || s < 1 || s > b.ell()) return false;
  const auto &cr = a.cones[r - 1], &cs = b.cones[s - 1];
  return cr.n == cs.n && mod_norm(cr.c + cs.c, cr.n) == 0;
}

DataSet compose_pair(const DataSet &a, const DataSet &b, int r, int s) {
  if (a.n != b.n) fail("DegreeMismatch", "pair composition needs equal degrees");
  check_index(a, r);
  check_index(b, s);
  if (!pair_compatible(a, b, r, s)) fail("NotCompatible", "indices are not a compatible pair");
  DataSet out;
  out.n = a.n;
  out.g0 = a.g0 + b.g0;
  out.r = 0;
  for (int i = 0; i < a.ell(); ++i)
    if (i != r - 1) out.cones.push_back(a.cones[i]);
  for (int i = 0; i < b.ell(); ++i)
    if (i != s - 1) out.cones.push_back(b.cones[i]);
  out = canonicalize(out);
  (void)genus(out);
  return out;
}

DataSet compose_trivial_pair(const DataSet &a, const DataSet &b) {
  if (a.n != b.n) fail("DegreeMismatch", "pair composition needs equal degrees");
  DataSet out;
  out.n = a.n;
  out.g0 = a.g0 + b.g0;
  out.r = 0;
  out.cones = a.cones;
  out.cones.insert(out.cones.end(), b.cones.begin(), b.cones.end());
  out = canonicalize(out);
  (void)genus(out);
  return out;
}

// --- enumeration ---

std::vector<DataSet> enumerate_datasets(i64 n, i64 g) {
  std::vector<DataSet> out;
  if (n < 1 || g < 0) return out;
  if (n == 1) {
    out.push_back(DataSet{1, g, 0, {}});
    return out;
  }
  // free rotations: g = 1 + n(g0-1) exactly
  if ((g - 1) % n == 0) {
    i64 g0 = (g - 1) / n + 1;
    if (g0 >= 0) {
      for (i64 r = 1; r < n; ++r)
        if (std::gcd(r, n) == 1) out.push_back(DataSet{n, g0, r, {}});
    }
  }
  std::vector<i64> divs;
  for (i64 d = 2; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  // 2g - 2 - 2n(g0-1) = sum (n - n/n_j) over cones
  for (i64 g0 = 0;; ++g0) {
    i64 budget = 2 * g - 2 - 2 * n * (g0 - 1);
    if (budget < 0) break;
    if (budget == 0) continue;  // l = 0 handled by the free enumeration
    // recursive multiset enumeration over cone orders and residues, sorted
    std::vector<ConePoint> cur;
    std::function<void(size_t, i64)> rec = [&](size_t di, i64 rem) {
      if (rem == 0) {
        if (cur.empty()) return;
        i64 s = 0;
        for (auto &cp : cur) s = mod_norm(s + checked_mul(n / cp.n, cp.c), n);
        if (s == 0) {
          auto repv = validate(n, g0, 0, cur);
          if (repv.valid) out.push_back(*repv.dataset);
        }
        return;
      }
      for (size_t i = di; i < divs.size(); ++i) {
        i64 w = n - n / divs[i];
        if (w > rem) continue;
        i64 cmin = 1;
        if (!cur.empty() && cur.back().n == divs[i]) cmin = cur.back().c;
        for (i64 c = cmin; c < divs[i]; ++c) {
          if (std::gcd(c, divs[i]) != 1) continue;
          cur.push_back({c, divs[i]});
          rec(i, rem - w);
          cur.pop_back();
        }
      }
    };
    rec(0, budget);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

i64 reduction_system_size(const DataSet &d) {
  auto cls = classify(d);
  if (cls.kind != ActionKind::Type1) fail("UnsupportedCase", "size formula stated for Type 1 data sets");
  if (d.g0 > 1) return checked_mul(d.n, 3 * d.g0 - 1);
  if (d.g0 == 1) return 2 * d.n;
  return 0;  // irreducible: empty reduction system
}

i64 reduction_system_size_pair(const DataSet &a, const DataSet &b, int r, int s) {
  if (classify(a).kind != ActionKind::Type1 || classify(b).kind != ActionKind::Type1)
    fail("UnsupportedCase", "pair formula stated for Type 1 constituents");
  if (!pair_compatible(a, b, r, s)) fail("NotCompatible", "not a compatible pair");
  i64 n = a.n;
  i64 k = n / a.cones[r - 1].n;  // = g - g1 - g2 + 1
  i64 h1 = a.g0, h2 = b.g0;
  if (h1 > 1 && h2 > 1) return checked_mul(n, 3 * h1 + 3 * h2 - 2) + k;
  if (h1 > 1 && h2 == 1) return checked_mul(n, 3 * h1 - 1) + k + 2 * n;
  if (h2 > 1 && h1 == 1) return checked_mul(n, 3 * h2 - 1) + k + 2 * n;
  if (h2 > 1 && h1 == 0) return checked_mul(n, 3 * h2 - 1) + k;
  if (h1 > 1 && h2 == 0) return checked_mul(n, 3 * h1 - 1) + k;
  return k;
}

} // namespace cyclact
