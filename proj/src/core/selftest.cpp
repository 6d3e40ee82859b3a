#include "core/selftest.hpp"

#include "core/comp_pair.hpp"
#include "core/decompose.hpp"
#include "core/fatgraph.hpp"
#include "core/homology.hpp"
#include "core/roots.hpp"

#include <functional>
#include <sstream>

namespace cyclact {

namespace {

struct Runner {
  std::ostringstream os;
  int failures = 0;
  void check(const std::string &name, const std::function<bool()> &fn) {
    bool ok = false;
    std::string err;
    try {
      ok = fn();
    } catch (const Error &e) {
      err = e.name() + ": " + e.what();
    } catch (const std::exception &e) {
      err = e.what();
    }
    os << (ok ? "ok   " : "FAIL ") << name;
    if (!ok && !err.empty()) os << " (" << err << ")";
    os << "\n";
    if (!ok) ++failures;
  }
};

DataSet ds(i64 n, i64 g0, std::vector<ConePoint> cones) {
  return make_dataset(n, g0, 0, std::move(cones));
}

} // namespace

int selftest(std::string &report) {
  Runner r;

  r.check("genus: C5 decagon action", [] { return genus(ds(5, 0, {{1, 5}, {3, 5}, {1, 5}})) == 2; });
  r.check("genus: C6 on S2", [] { return genus(ds(6, 0, {{1, 2}, {1, 2}, {1, 3}, {2, 3}})) == 2; });
  r.check("genus: C30 on S49", [] { return genus(ds(30, 1, {{1, 2}, {1, 6}, {1, 10}, {7, 30}})) == 49; });
  r.check("genus: root realizing C5", [] { return genus(ds(5, 0, {{1, 5}, {2, 5}, {3, 5}, {4, 5}})) == 4; });
  r.check("classify: Type 1 irreducible", [] {
    auto c = classify(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}}));
    return c.kind == ActionKind::Type1 && c.irreducible;
  });
  r.check("classify: rotational pattern", [] {
    return classify(ds(3, 1, {{1, 3}, {2, 3}})).kind == ActionKind::Rotational;
  });
  r.check("polygon: hexagon word", [] {
    auto p = build_polygon(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}}));
    return p.k == 6 && quotient_genus(p) == 1 && realized_data_set(p) == ds(6, 0, {{1, 2}, {1, 3}, {1, 6}});
  });
  r.check("polygon: decagon realization round-trip", [] {
    auto d = ds(5, 0, {{1, 5}, {3, 5}, {1, 5}});
    auto p = build_polygon(d);
    return p.k == 10 && quotient_genus(p) == 2 && realized_data_set(p) == d;
  });
  r.check("normalize: hexagon golden basis", [] {
    auto p = build_polygon(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}}));
    auto nm = normalize_polygon(p);
    return nm.basis == std::vector<std::vector<i64>>{{1, 1, 0}, {-1, 0, 1}};
  });
  r.check("rep: C6 pair matrix symplectic of order 6", [] {
    auto M = rep_comp_pair(ds(6, 0, {{1, 2}, {1, 3}, {1, 6}}), ds(6, 0, {{1, 2}, {2, 3}, {5, 6}}), 2, 2);
    return is_symplectic(M) && matrix_order(M) == 6;
  });
  r.check("fatgraph: decagon sigma0", [] {
    auto p = build_polygon(ds(5, 0, {{1, 5}, {3, 5}, {1, 5}}));
    auto g = from_polygon(p);
    return boundary_components(g).size() == 1 && graph_genus(g) == 2;
  });
  r.check("roots: split of the C5 root realizing set", [] {
    auto [d1, d2] = split_root(ds(5, 0, {{1, 5}, {2, 5}, {3, 5}, {4, 5}}));
    return d1 == ds(5, 0, {{1, 5}, {2, 5}, {2, 5}}) && d2 == ds(5, 0, {{3, 5}, {3, 5}, {4, 5}});
  });
  r.check("roots: nonseparating root blocks", [] {
    auto rr = rep_root_nonsep(ds(5, 0, {{3, 5}, {3, 5}, {4, 5}}));
    return rr.B.at(2, 0) == -1 && rr.B.at(3, 0) == 1 && is_symplectic(rr.M);
  });
  r.check("decompose: C6 on S2", [] {
    auto dec = decompose(ds(6, 0, {{1, 2}, {1, 2}, {1, 3}, {2, 3}}));
    return dec.root->kind == DecompNode::Kind::Pair && dec.evaluate() == dec.input;
  });
  r.check("reduction sizes", [] {
    return reduction_system_size(ds(6, 1, {{1, 2}, {1, 3}, {1, 6}})) == 12 &&
           reduction_system_size(ds(3, 2, {{1, 3}, {1, 3}, {1, 3}})) == 15;
  });

  report = r.os.str();
  return r.failures;
}

} // namespace cyclact
