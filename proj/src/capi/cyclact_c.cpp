#include "cyclact.h"

#include "core/comp_pair.hpp"
#include "core/decompose.hpp"
#include "core/fatgraph.hpp"
#include "core/homology.hpp"
#include "core/json_io.hpp"
#include "core/roots.hpp"
#include "core/selftest.hpp"
#include "core/svg.hpp"

#include <cstring>
#include <string>

using namespace cyclact;

struct cyclact_dataset { DataSet v; };
struct cyclact_polygon { SidePairedPolygon v; };
struct cyclact_fatgraph { FatGraph v; };
struct cyclact_autom { FatGraphMap v; };
struct cyclact_matrix { IntMatrix v; std::string basis; };  // v is interleaved
struct cyclact_decomp { Decomposition v; };

namespace {

thread_local std::string g_err_name, g_err_msg;

char *dup_string(const std::string &s) {
  char *p = (char *)std::malloc(s.size() + 1);
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <typename Fn>
cyclact_status guard(Fn &&fn) {
  try {
    fn();
    return CYCLACT_OK;
  } catch (const Error &e) {
    g_err_name = e.name();
    g_err_msg = e.what();
    return e.name() == "Internal" ? CYCLACT_ERR_INTERNAL : CYCLACT_ERR_DOMAIN;
  } catch (const nlohmann::json::exception &e) {
    g_err_name = "BadJson";
    g_err_msg = e.what();
    return CYCLACT_ERR_USAGE;
  } catch (const std::exception &e) {
    g_err_name = "Internal";
    g_err_msg = e.what();
    return CYCLACT_ERR_INTERNAL;
  }
}

cyclact_status usage_error(const char *msg) {
  g_err_name = "Usage";
  g_err_msg = msg;
  return CYCLACT_ERR_USAGE;
}

std::string check_basis(const char *basis) {
  if (!basis || std::string(basis) == "interleaved") return "interleaved";
  if (std::string(basis) == "split") return "split";
  fail("Usage", "basis must be 'interleaved' or 'split'");
}

std::vector<ConePoint> cone_vec(const int64_t *cones, int n_cones) {
  std::vector<ConePoint> cs;
  for (int i = 0; i < n_cones; ++i) cs.push_back({cones[2 * i], cones[2 * i + 1]});
  return cs;
}

} // namespace

extern "C" {

const char *cyclact_last_error_name(void) { return g_err_name.c_str(); }
const char *cyclact_last_error_message(void) { return g_err_msg.c_str(); }

void cyclact_string_free(char *s) { std::free(s); }
void cyclact_dataset_free(cyclact_dataset *d) { delete d; }
void cyclact_polygon_free(cyclact_polygon *p) { delete p; }
void cyclact_fatgraph_free(cyclact_fatgraph *g) { delete g; }
void cyclact_autom_free(cyclact_autom *a) { delete a; }
void cyclact_matrix_free(cyclact_matrix *m) { delete m; }
void cyclact_decomp_free(cyclact_decomp *d) { delete d; }

cyclact_status cyclact_dataset_make(int64_t n, int64_t g0, int64_t r, const int64_t *cones,
                                    int n_cones, cyclact_dataset **out) {
  if (!out || (n_cones > 0 && !cones)) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{make_dataset(n, g0, r, cone_vec(cones, n_cones))}; });
}

cyclact_status cyclact_dataset_parse(const char *json_s, cyclact_dataset **out) {
  if (!out || !json_s) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{dataset_from_json(json::parse(json_s))}; });
}

cyclact_status cyclact_validate(int64_t n, int64_t g0, int64_t r, const int64_t *cones,
                                int n_cones, char **report_json) {
  if (!report_json || (n_cones > 0 && !cones)) return usage_error("null argument");
  return guard([&] {
    auto rep = validate(n, g0, r, cone_vec(cones, n_cones));
    *report_json = dup_string(report_to_json(rep).dump());
  });
}

cyclact_status cyclact_dataset_to_json(const cyclact_dataset *d, char **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = dup_string(dataset_to_json(d->v).dump()); });
}

cyclact_status cyclact_genus(const cyclact_dataset *d, int64_t *out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = genus(d->v); });
}

cyclact_status cyclact_classify(const cyclact_dataset *d, char **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] {
    auto c = classify(d->v);
    const char *k = c.kind == ActionKind::Rotational ? "rotational"
                    : c.kind == ActionKind::Type1    ? "type1"
                                                     : "type2";
    *out = dup_string(json{{"kind", k}, {"irreducible", c.irreducible}}.dump());
  });
}

cyclact_status cyclact_self_compatible_indices(const cyclact_dataset *d, char **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] {
    json arr = json::array();
    for (auto [r, s] : self_compatible_indices(d->v)) arr.push_back({r, s});
    *out = dup_string(arr.dump());
  });
}

cyclact_status cyclact_compose_self(const cyclact_dataset *d, int r, int s, cyclact_dataset **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{compose_self(d->v, r, s)}; });
}

cyclact_status cyclact_compose_trivial_self(const cyclact_dataset *d, int64_t g, cyclact_dataset **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{compose_trivial_self(d->v, g)}; });
}

cyclact_status cyclact_strip_trivial_handles(const cyclact_dataset *d, cyclact_dataset **out,
                                             int64_t *stripped) {
  if (!d || !out || !stripped) return usage_error("null argument");
  return guard([&] {
    auto [base, g0] = strip_trivial_handles(d->v);
    *out = new cyclact_dataset{base};
    *stripped = g0;
  });
}

cyclact_status cyclact_compose_pair(const cyclact_dataset *a, const cyclact_dataset *b, int r,
                                    int s, cyclact_dataset **out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{compose_pair(a->v, b->v, r, s)}; });
}

cyclact_status cyclact_compose_trivial_pair(const cyclact_dataset *a, const cyclact_dataset *b,
                                            cyclact_dataset **out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{compose_trivial_pair(a->v, b->v)}; });
}

cyclact_status cyclact_enumerate(int64_t n, int64_t g, char **out) {
  if (!out) return usage_error("null argument");
  return guard([&] {
    json arr = json::array();
    for (const auto &d : enumerate_datasets(n, g)) arr.push_back(dataset_to_json(d));
    *out = dup_string(arr.dump());
  });
}

cyclact_status cyclact_reduction_size(const cyclact_dataset *d, int64_t *out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = reduction_system_size(d->v); });
}

cyclact_status cyclact_reduction_size_pair(const cyclact_dataset *a, const cyclact_dataset *b,
                                           int r, int s, int64_t *out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] { *out = reduction_system_size_pair(a->v, b->v, r, s); });
}

cyclact_status cyclact_build_polygon(const cyclact_dataset *d, cyclact_polygon **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_polygon{build_polygon(d->v)}; });
}

cyclact_status cyclact_polygon_to_json(const cyclact_polygon *p, char **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] { *out = dup_string(polygon_to_json(p->v).dump()); });
}

cyclact_status cyclact_polygon_genus(const cyclact_polygon *p, int64_t *out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] { *out = quotient_genus(p->v); });
}

cyclact_status cyclact_polygon_rotation(const cyclact_polygon *p, char **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] {
    auto perm = rotation_action(p->v);
    json arr = json::array();
    for (int i = 0; i < p->v.n_letters; ++i)
      arr.push_back({letter_str(i + 1, p->v.letter_names),
                     letter_str(perm.image[i], p->v.letter_names)});
    *out = dup_string(arr.dump());
  });
}

cyclact_status cyclact_realized_dataset(const cyclact_polygon *p, cyclact_dataset **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{realized_data_set(p->v)}; });
}

cyclact_status cyclact_polygon_render_svg(const cyclact_polygon *p, char **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] { *out = dup_string(render_svg(p->v)); });
}

cyclact_status cyclact_polygon_normalize(const cyclact_polygon *p, char **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] {
    auto nm = normalize_polygon(p->v);
    json basis = json::array();
    for (size_t i = 0; i + 1 < nm.basis.size(); i += 2) {
      basis.push_back({{"l", nm.basis[i]}, {"m", nm.basis[i + 1]}});
    }
    std::vector<std::string> canon_names;
    for (size_t i = 0; i < nm.basis.size() / 2; ++i) {
      canon_names.push_back("l" + std::to_string(i + 1));
      canon_names.push_back("m" + std::to_string(i + 1));
    }
    *out = dup_string(json{{"letters", p->v.letter_names},
                           {"steps", nm.steps},
                           {"word", word_to_json(nm.word, canon_names)},
                           {"basis", basis}}
                          .dump());
  });
}

cyclact_status cyclact_cyclic_reduce(const char *word_json, char **out) {
  if (!word_json || !out) return usage_error("null argument");
  return guard([&] {
    std::vector<std::string> names;
    auto w = word_from_json(json::parse(word_json), names);
    *out = dup_string(word_to_json(cyclic_reduce(w), names).dump());
  });
}

cyclact_status cyclact_normalize_word(const char *word_json, char **out) {
  if (!word_json || !out) return usage_error("null argument");
  return guard([&] {
    std::vector<std::string> names;
    auto w = word_from_json(json::parse(word_json), names);
    auto nm = normalize_full(w, (int)names.size());
    json basis = json::array();
    for (size_t i = 0; i + 1 < nm.basis.size(); i += 2)
      basis.push_back({{"l", nm.basis[i]}, {"m", nm.basis[i + 1]}});
    std::vector<std::string> canon_names;
    for (size_t i = 0; i < nm.basis.size() / 2; ++i) {
      canon_names.push_back("l" + std::to_string(i + 1));
      canon_names.push_back("m" + std::to_string(i + 1));
    }
    *out = dup_string(json{{"letters", names},
                           {"steps", nm.steps},
                           {"word", word_to_json(nm.word, canon_names)},
                           {"basis", basis}}
                          .dump());
  });
}

cyclact_status cyclact_fatgraph_from_polygon(const cyclact_polygon *p, cyclact_fatgraph **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_fatgraph{from_polygon(p->v)}; });
}

cyclact_status cyclact_fatgraph_parse(const char *json_s, cyclact_fatgraph **out) {
  if (!json_s || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_fatgraph{fatgraph_from_json(json::parse(json_s))}; });
}

cyclact_status cyclact_fatgraph_to_json(const cyclact_fatgraph *g, char **out) {
  if (!g || !out) return usage_error("null argument");
  return guard([&] { *out = dup_string(fatgraph_to_json(g->v).dump()); });
}

cyclact_status cyclact_fatgraph_boundaries(const cyclact_fatgraph *g, char **out) {
  if (!g || !out) return usage_error("null argument");
  return guard([&] {
    json arr = json::array();
    for (const auto &cyc : boundary_components(g->v)) {
      json c = json::array();
      for (int d : cyc) c.push_back(g->v.dir_name(d));
      arr.push_back(c);
    }
    *out = dup_string(arr.dump());
  });
}

cyclact_status cyclact_fatgraph_genus(const cyclact_fatgraph *g, int64_t *out) {
  if (!g || !out) return usage_error("null argument");
  return guard([&] { *out = graph_genus(g->v); });
}

cyclact_status cyclact_autom_from_rotation(const cyclact_polygon *p, cyclact_autom **out) {
  if (!p || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_autom{automorphism_from_rotation(p->v)}; });
}

cyclact_status cyclact_autom_order(const cyclact_autom *a, int64_t *out) {
  if (!a || !out) return usage_error("null argument");
  return guard([&] { *out = map_order(a->v); });
}

cyclact_status cyclact_autom_is_irreducible(const cyclact_autom *a, int *out) {
  if (!a || !out) return usage_error("null argument");
  return guard([&] { *out = is_irreducible(a->v, map_order(a->v)) ? 1 : 0; });
}

cyclact_status cyclact_autom_dataset(const cyclact_autom *a, cyclact_dataset **out) {
  if (!a || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{dataset_from_automorphism(a->v)}; });
}

cyclact_status cyclact_autom_graph(const cyclact_autom *a, cyclact_fatgraph **out) {
  if (!a || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_fatgraph{a->v.graph}; });
}

cyclact_status cyclact_autom_map(const cyclact_autom *a, char **out) {
  if (!a || !out) return usage_error("null argument");
  return guard([&] {
    json arr = json::array();
    for (int d = 0; d < a->v.graph.n_directed(); d += 2)
      arr.push_back({a->v.graph.dir_name(d), a->v.graph.dir_name(a->v.map[d])});
    *out = dup_string(arr.dump());
  });
}

cyclact_status cyclact_glue_compatible(const cyclact_dataset *a, const cyclact_dataset *b, int r,
                                       int s, cyclact_autom **out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] {
    auto gp = glue_compatible(a->v, b->v, r, s);
    *out = new cyclact_autom{FatGraphMap{gp.graph, gp.automorphism}};
  });
}

cyclact_status cyclact_rep_type1(const cyclact_dataset *d, const char *basis, cyclact_matrix **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_matrix{rep_type1(d->v), check_basis(basis)}; });
}

cyclact_status cyclact_rep_direct_sum(const cyclact_dataset *a, const cyclact_dataset *b, int r,
                                      int s, const char *basis, cyclact_matrix **out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_matrix{rep_direct_sum(a->v, b->v, r, s), check_basis(basis)}; });
}

cyclact_status cyclact_rep_comp_pair(const cyclact_dataset *a, const cyclact_dataset *b, int r,
                                     int s, const char *basis, cyclact_matrix **out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_matrix{rep_comp_pair(a->v, b->v, r, s), check_basis(basis)}; });
}

cyclact_status cyclact_matrix_to_json(const cyclact_matrix *m, char **out) {
  if (!m || !out) return usage_error("null argument");
  return guard([&] {
    json j = matrix_to_json(m->basis == "split" ? to_split_basis(m->v) : m->v, m->basis);
    // order and the symplectic property are intrinsic; report them from the
    // interleaved form regardless of the output ordering
    j["symplectic"] = is_symplectic(m->v);
    auto ord = matrix_order(m->v);
    if (ord) j["order"] = *ord;
    *out = dup_string(j.dump());
  });
}

cyclact_status cyclact_matrix_order(const cyclact_matrix *m, int64_t *out) {
  if (!m || !out) return usage_error("null argument");
  return guard([&] {
    auto o = matrix_order(m->v);
    if (!o) fail("OrderNotFound", "order exceeds the search bound");
    *out = *o;
  });
}

cyclact_status cyclact_matrix_is_symplectic(const cyclact_matrix *m, int *out) {
  if (!m || !out) return usage_error("null argument");
  return guard([&] { *out = is_symplectic(m->v) ? 1 : 0; });
}

cyclact_status cyclact_is_root_realizing(const cyclact_dataset *d, int *out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = is_root_realizing(d->v) ? 1 : 0; });
}

cyclact_status cyclact_split_root(const cyclact_dataset *d, cyclact_dataset **d1,
                                  cyclact_dataset **d2) {
  if (!d || !d1 || !d2) return usage_error("null argument");
  return guard([&] {
    auto [a, b] = split_root(d->v);
    *d1 = new cyclact_dataset{a};
    *d2 = new cyclact_dataset{b};
  });
}

cyclact_status cyclact_rep_root_nonsep(const cyclact_dataset *d, const char *basis, char **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] {
    auto rr = rep_root_nonsep(d->v);
    bool sym = is_symplectic(rr.M);
    json j;
    if (check_basis(basis) == "split") {
      RootRep conv = rr;
      conv.M = to_split_basis(rr.M);
      conv.E = to_split_basis(rr.E);
      j = rootrep_to_json(conv, "split");
    } else {
      j = rootrep_to_json(rr, "interleaved");
    }
    j["symplectic"] = sym;
    *out = dup_string(j.dump());
  });
}

cyclact_status cyclact_rep_root_sep(const cyclact_dataset *a, int i1, const cyclact_dataset *b,
                                    int i2, const char *basis, cyclact_matrix **out) {
  if (!a || !b || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_matrix{rep_root_sep(a->v, i1, b->v, i2), check_basis(basis)}; });
}

cyclact_status cyclact_decompose(const cyclact_dataset *d, int64_t budget, cyclact_decomp **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] {
    auto dec = decompose(d->v, budget > 0 ? budget : 2'000'000);
    *out = new cyclact_decomp{std::move(dec)};
  });
}

cyclact_status cyclact_decomp_to_json(const cyclact_decomp *d, char **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = dup_string(decomposition_to_json(d->v).dump()); });
}

cyclact_status cyclact_decomp_evaluate(const cyclact_decomp *d, cyclact_dataset **out) {
  if (!d || !out) return usage_error("null argument");
  return guard([&] { *out = new cyclact_dataset{d->v.evaluate()}; });
}

cyclact_status cyclact_selftest(char **report) {
  if (!report) return usage_error("null argument");
  std::string s;
  int failures = 0;
  auto st = guard([&] { failures = selftest(s); });
  if (st != CYCLACT_OK) return st;
  *report = dup_string(s);
  if (failures) {
    g_err_name = "SelftestFailed";
    g_err_msg = std::to_string(failures) + " checks failed";
    return CYCLACT_ERR_DOMAIN;
  }
  return CYCLACT_OK;
}

} // extern "C"
