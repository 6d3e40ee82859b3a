#include "core/json_io.hpp"

#include <map>

namespace cyclact {

json dataset_to_json(const DataSet &d) {
  json cones = json::array();
  for (const auto &cp : d.cones) cones.push_back({cp.c, cp.n});
  return json{{"n", d.n}, {"g0", d.g0}, {"r", d.r}, {"cone", cones}};
}

DataSet dataset_from_json(const json &j) {
  std::vector<ConePoint> cones;
  if (j.contains("cone"))
    for (const auto &c : j.at("cone")) cones.push_back({c.at(0).get<i64>(), c.at(1).get<i64>()});
  return make_dataset(j.at("n").get<i64>(), j.value("g0", (i64)0), j.value("r", (i64)0), cones);
}

json report_to_json(const ValidationReport &r) {
  json out;
  out["valid"] = r.valid;
  if (r.valid) {
    out["genus"] = r.genus;
  } else {
    const auto &is = r.issues.front();
    out["error"] = is.code;
    if (!is.which.empty()) out["which"] = is.which;
    json all = json::array();
    for (const auto &i : r.issues) {
      json e{{"error", i.code}, {"detail", i.detail}};
      if (!i.which.empty()) e["which"] = i.which;
      all.push_back(e);
    }
    out["issues"] = all;
  }
  if (!r.warnings.empty()) out["warnings"] = r.warnings;
  return out;
}

json word_to_json(const SignedWord &w, const std::vector<std::string> &names) {
  json out = json::array();
  for (int x : w) out.push_back(letter_str(x, names));
  return out;
}

SignedWord word_from_json(const json &j, std::vector<std::string> &names_out) {
  std::map<std::string, int> ids;
  for (size_t i = 0; i < names_out.size(); ++i) ids[names_out[i]] = (int)i + 1;
  SignedWord w;
  for (const auto &t : j) {
    std::string s = t.get<std::string>();
    bool inv = false;
    if (s.size() > 3 && s.substr(s.size() - 3) == "^-1") {
      inv = true;
      s = s.substr(0, s.size() - 3);
    }
    auto it = ids.find(s);
    int id;
    if (it == ids.end()) {
      names_out.push_back(s);
      id = (int)names_out.size();
      ids[s] = id;
    } else {
      id = it->second;
    }
    w.push_back(inv ? -id : id);
  }
  return w;
}

json polygon_to_json(const SidePairedPolygon &p) {
  json pairing = json::array();
  for (int i = 0; i < p.k; ++i)
    if (i < p.pairing[i]) pairing.push_back({i, p.pairing[i]});
  return json{{"word", word_to_json(p.word, p.letter_names)},
              {"pairing", pairing},
              {"shift", p.shift}};
}

json fatgraph_to_json(const FatGraph &g) {
  json edges = json::array();
  for (const auto &nm : g.edge_names) edges.push_back(nm);
  json sigma1 = json::array();
  for (int e = 0; e < g.n_undirected; ++e)
    sigma1.push_back({g.dir_name(2 * e), g.dir_name(2 * e + 1)});
  json sigma0 = json::array();
  for (const auto &cyc : fg_vertices(g)) {
    json c = json::array();
    for (int d : cyc) c.push_back(g.dir_name(d));
    sigma0.push_back(c);
  }
  return json{{"edges", edges}, {"sigma1", sigma1}, {"sigma0", sigma0}};
}

FatGraph fatgraph_from_json(const json &j) {
  FatGraph g;
  std::map<std::string, int> id;
  for (const auto &e : j.at("edges")) {
    std::string nm = e.get<std::string>();
    id[nm] = g.n_undirected++;
    g.edge_names.push_back(nm);
  }
  auto dir_of = [&](const std::string &s) {
    if (s.size() > 3 && s.substr(s.size() - 3) == "^-1") {
      auto it = id.find(s.substr(0, s.size() - 3));
      if (it == id.end()) fail("BadGraph", "unknown edge " + s);
      return 2 * it->second + 1;
    }
    auto it = id.find(s);
    if (it == id.end()) fail("BadGraph", "unknown edge " + s);
    return 2 * it->second;
  };
  g.sigma0.assign(g.n_directed(), -1);
  for (const auto &cyc : j.at("sigma0")) {
    std::vector<int> c;
    for (const auto &e : cyc) c.push_back(dir_of(e.get<std::string>()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (g.sigma0[c[i]] != -1) fail("BadGraph", "sigma0 visits an edge twice");
      g.sigma0[c[i]] = c[(i + 1) % c.size()];
    }
  }
  for (int d = 0; d < g.n_directed(); ++d)
    if (g.sigma0[d] < 0) fail("BadGraph", "sigma0 misses a directed edge");
  g.validate();
  return g;
}

json matrix_to_json(const IntMatrix &m, const std::string &basis) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(m.at(i, j2));
    rows.push_back(row);
  }
  json out;
  out["g"] = m.rows / 2;
  auto ord = matrix_order(m);
  if (ord) out["order"] = *ord;
  out["basis"] = basis.empty() ? "interleaved" : basis;
  out["symplectic"] = is_symplectic(m);
  out["rows"] = rows;
  return out;
}

json rootrep_to_json(const RootRep &r, const std::string &basis) {
  auto block = [&](const IntMatrix &m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
      json row = json::array();
      for (int j2 = 0; j2 < m.cols; ++j2) row.push_back(m.at(i, j2));
      rows.push_back(row);
    }
    return rows;
  };
  json out;
  out["g"] = r.E.rows / 2;
  out["basis"] = basis.empty() ? "interleaved" : basis;
  out["E"] = block(r.E);
  out["B"] = block(r.B);
  out["C"] = block(r.C);
  out["I"] = block(IntMatrix::identity(2));
  out["matrix"] = block(r.M);
  out["symplectic"] = is_symplectic(r.M);
  return out;
}

static json node_to_json(const DecompNode &n) {
  json out;
  switch (n.kind) {
    case DecompNode::Kind::Leaf:
      out["node"] = "leaf";
      break;
    case DecompNode::Kind::Self:
      out["node"] = "self";
      out["r"] = n.r;
      out["s"] = n.s;
      break;
    case DecompNode::Kind::TrivialSelf:
      out["node"] = "trivial_self";
      out["g"] = n.count;
      break;
    case DecompNode::Kind::Pair:
      out["node"] = "pair";
      out["r"] = n.r;
      out["s"] = n.s;
      break;
    case DecompNode::Kind::TrivialPair:
      out["node"] = "trivial_pair";
      break;
  }
  out["dataset"] = dataset_to_json(n.value);
  if (!n.child.empty()) {
    json ch = json::array();
    for (const auto &c : n.child) ch.push_back(node_to_json(*c));
    out["children"] = ch;
  }
  return out;
}

json decomposition_to_json(const Decomposition &d) {
  json out;
  out["input"] = dataset_to_json(d.input);
  out["handles_added"] = d.handles_added;
  out["tree"] = node_to_json(*d.root);
  return out;
}

} // namespace cyclact
