#include <cyclact.h>
#include <doctest.h>

#include <cstring>
#include <string>

namespace {

std::string take(char *s) {
  std::string out = s ? s : "";
  cyclact_string_free(s);
  return out;
}

} // namespace

TEST_CASE("dataset lifecycle and validation") {
  int64_t cones[] = {1, 5, 3, 5, 1, 5};
  cyclact_dataset *d = nullptr;
  REQUIRE(cyclact_dataset_make(5, 0, 0, cones, 3, &d) == CYCLACT_OK);
  int64_t g = 0;
  CHECK(cyclact_genus(d, &g) == CYCLACT_OK);
  CHECK(g == 2);
  char *js = nullptr;
  CHECK(cyclact_dataset_to_json(d, &js) == CYCLACT_OK);
  std::string dumped = take(js);
  CHECK(dumped == "{\"n\":5,\"g0\":0,\"r\":0,\"cone\":[[1,5],[1,5],[3,5]]}");
  cyclact_dataset *d2 = nullptr;
  REQUIRE(cyclact_dataset_parse(dumped.c_str(), &d2) == CYCLACT_OK);
  char *js2 = nullptr;
  CHECK(cyclact_dataset_to_json(d2, &js2) == CYCLACT_OK);
  CHECK(take(js2) == dumped);
  cyclact_dataset_free(d);
  cyclact_dataset_free(d2);

  char *rep = nullptr;
  int64_t bad[] = {1, 2, 1, 4};
  REQUIRE(cyclact_validate(4, 0, 0, bad, 2, &rep) == CYCLACT_OK);
  std::string r = take(rep);
  CHECK(r.find("\"valid\":false") != std::string::npos);
  CHECK(r.find("\"which\":\"iv\"") != std::string::npos);
}

TEST_CASE("error reporting carries module error names") {
  cyclact_dataset *d = nullptr;
  int64_t cones[] = {1, 2, 1, 2, 1, 3, 2, 3};
  REQUIRE(cyclact_dataset_make(6, 0, 0, cones, 4, &d) == CYCLACT_OK);
  cyclact_polygon *p = nullptr;
  CHECK(cyclact_build_polygon(d, &p) == CYCLACT_ERR_DOMAIN);
  CHECK(std::string(cyclact_last_error_name()) == "NotType1");
  CHECK(cyclact_build_polygon(nullptr, &p) == CYCLACT_ERR_USAGE);
  cyclact_dataset_free(d);
}

TEST_CASE("polygon pipeline through the C surface") {
  cyclact_dataset *d = nullptr;
  int64_t cones[] = {1, 2, 1, 3, 1, 6};
  REQUIRE(cyclact_dataset_make(6, 0, 0, cones, 3, &d) == CYCLACT_OK);
  cyclact_polygon *p = nullptr;
  REQUIRE(cyclact_build_polygon(d, &p) == CYCLACT_OK);
  char *pj = nullptr;
  REQUIRE(cyclact_polygon_to_json(p, &pj) == CYCLACT_OK);
  std::string pjson = take(pj);
  CHECK(pjson.find("\"shift\":1") != std::string::npos);
  int64_t qg = -1;
  CHECK(cyclact_polygon_genus(p, &qg) == CYCLACT_OK);
  CHECK(qg == 1);
  cyclact_dataset *back = nullptr;
  REQUIRE(cyclact_realized_dataset(p, &back) == CYCLACT_OK);
  char *bj = nullptr;
  cyclact_dataset_to_json(back, &bj);
  CHECK(take(bj) == "{\"n\":6,\"g0\":0,\"r\":0,\"cone\":[[1,2],[1,3],[1,6]]}");
  char *svg = nullptr;
  REQUIRE(cyclact_polygon_render_svg(p, &svg) == CYCLACT_OK);
  CHECK(take(svg).find("<svg") == 0);
  char *norm = nullptr;
  REQUIRE(cyclact_polygon_normalize(p, &norm) == CYCLACT_OK);
  std::string nj = take(norm);
  CHECK(nj.find("\"basis\":[{\"l\":[1,1,0],\"m\":[-1,0,1]}]") != std::string::npos);
  cyclact_dataset_free(back);
  cyclact_polygon_free(p);
  cyclact_dataset_free(d);
}

TEST_CASE("word interface") {
  char *out = nullptr;
  REQUIRE(cyclact_cyclic_reduce("[\"a\",\"b\",\"b^-1\",\"a^-1\",\"c\"]", &out) == CYCLACT_OK);
  CHECK(take(out) == "[\"c\"]");
  REQUIRE(cyclact_normalize_word("[\"a\",\"b\",\"a^-1\",\"b^-1\"]", &out) == CYCLACT_OK);
  CHECK(take(out).find("\"steps\":0") != std::string::npos);
  CHECK(cyclact_normalize_word("{bad json", &out) == CYCLACT_ERR_USAGE);
}

TEST_CASE("fat graph and automorphism surface") {
  cyclact_dataset *d = nullptr;
  int64_t cones[] = {1, 5, 3, 5, 1, 5};
  REQUIRE(cyclact_dataset_make(5, 0, 0, cones, 3, &d) == CYCLACT_OK);
  cyclact_polygon *p = nullptr;
  REQUIRE(cyclact_build_polygon(d, &p) == CYCLACT_OK);
  cyclact_fatgraph *g = nullptr;
  REQUIRE(cyclact_fatgraph_from_polygon(p, &g) == CYCLACT_OK);
  char *gj = nullptr;
  REQUIRE(cyclact_fatgraph_to_json(g, &gj) == CYCLACT_OK);
  std::string graph_json = take(gj);
  cyclact_fatgraph *g2 = nullptr;
  REQUIRE(cyclact_fatgraph_parse(graph_json.c_str(), &g2) == CYCLACT_OK);
  int64_t gg = -1;
  CHECK(cyclact_fatgraph_genus(g2, &gg) == CYCLACT_OK);
  CHECK(gg == 2);
  char *bj = nullptr;
  REQUIRE(cyclact_fatgraph_boundaries(g, &bj) == CYCLACT_OK);
  CHECK(take(bj).find("[[") == 0);

  cyclact_autom *a = nullptr;
  REQUIRE(cyclact_autom_from_rotation(p, &a) == CYCLACT_OK);
  int64_t order = 0;
  CHECK(cyclact_autom_order(a, &order) == CYCLACT_OK);
  CHECK(order == 5);
  int irr = 0;
  CHECK(cyclact_autom_is_irreducible(a, &irr) == CYCLACT_OK);
  CHECK(irr == 1);
  cyclact_dataset *rec = nullptr;
  REQUIRE(cyclact_autom_dataset(a, &rec) == CYCLACT_OK);
  char *rj = nullptr;
  cyclact_dataset_to_json(rec, &rj);
  CHECK(take(rj) == "{\"n\":5,\"g0\":0,\"r\":0,\"cone\":[[1,5],[1,5],[3,5]]}");

  cyclact_autom_free(a);
  cyclact_dataset_free(rec);
  cyclact_fatgraph_free(g);
  cyclact_fatgraph_free(g2);
  cyclact_polygon_free(p);
  cyclact_dataset_free(d);
}

TEST_CASE("glue and representations") {
  cyclact_dataset *d1 = nullptr, *d2 = nullptr;
  int64_t c1[] = {1, 2, 1, 3, 1, 6}, c2[] = {1, 2, 2, 3, 5, 6};
  REQUIRE(cyclact_dataset_make(6, 0, 0, c1, 3, &d1) == CYCLACT_OK);
  REQUIRE(cyclact_dataset_make(6, 0, 0, c2, 3, &d2) == CYCLACT_OK);

  cyclact_autom *a = nullptr;
  REQUIRE(cyclact_glue_compatible(d1, d2, 2, 2, &a) == CYCLACT_OK);
  int64_t order = 0;
  CHECK(cyclact_autom_order(a, &order) == CYCLACT_OK);
  CHECK(order == 6);
  cyclact_autom_free(a);

  cyclact_matrix *m = nullptr;
  REQUIRE(cyclact_rep_comp_pair(d1, d2, 2, 2, "interleaved", &m) == CYCLACT_OK);
  int sym = 0;
  CHECK(cyclact_matrix_is_symplectic(m, &sym) == CYCLACT_OK);
  CHECK(sym == 1);
  CHECK(cyclact_matrix_order(m, &order) == CYCLACT_OK);
  CHECK(order == 6);
  char *mj = nullptr;
  REQUIRE(cyclact_matrix_to_json(m, &mj) == CYCLACT_OK);
  CHECK(take(mj).find("\"order\":6") != std::string::npos);
  cyclact_matrix_free(m);

  CHECK(cyclact_rep_comp_pair(d1, d2, 1, 2, "interleaved", &m) == CYCLACT_ERR_DOMAIN);
  CHECK(std::string(cyclact_last_error_name()) == "NotCompatible");

  cyclact_dataset_free(d1);
  cyclact_dataset_free(d2);
}

TEST_CASE("roots through the C surface") {
  cyclact_dataset *d = nullptr;
  int64_t cones[] = {1, 5, 2, 5, 3, 5, 4, 5};
  REQUIRE(cyclact_dataset_make(5, 0, 0, cones, 4, &d) == CYCLACT_OK);
  int rr = 0;
  CHECK(cyclact_is_root_realizing(d, &rr) == CYCLACT_OK);
  CHECK(rr == 1);
  cyclact_dataset *a = nullptr, *b = nullptr;
  REQUIRE(cyclact_split_root(d, &a, &b) == CYCLACT_OK);
  char *out = nullptr;
  REQUIRE(cyclact_rep_root_nonsep(b, "interleaved", &out) == CYCLACT_OK);
  std::string s = take(out);
  CHECK(s.find("\"E\":") != std::string::npos);
  CHECK(s.find("\"symplectic\":true") != std::string::npos);
  cyclact_dataset_free(a);
  cyclact_dataset_free(b);
  cyclact_dataset_free(d);
}

TEST_CASE("decompose through the C surface") {
  cyclact_dataset *d = nullptr;
  int64_t cones[] = {1, 2, 1, 2, 1, 3, 2, 3};
  REQUIRE(cyclact_dataset_make(6, 0, 0, cones, 4, &d) == CYCLACT_OK);
  cyclact_decomp *dec = nullptr;
  REQUIRE(cyclact_decompose(d, 0, &dec) == CYCLACT_OK);
  char *j = nullptr;
  REQUIRE(cyclact_decomp_to_json(dec, &j) == CYCLACT_OK);
  CHECK(take(j).find("\"node\":\"pair\"") != std::string::npos);
  cyclact_dataset *ev = nullptr;
  REQUIRE(cyclact_decomp_evaluate(dec, &ev) == CYCLACT_OK);
  char *ej = nullptr, *dj = nullptr;
  cyclact_dataset_to_json(ev, &ej);
  cyclact_dataset_to_json(d, &dj);
  CHECK(take(ej) == take(dj));
  cyclact_dataset_free(ev);
  cyclact_decomp_free(dec);
  cyclact_dataset_free(d);
}

TEST_CASE("outputs are byte-identical across runs") {
  cyclact_dataset *d = nullptr;
  int64_t cones[] = {1, 5, 2, 5, 2, 5};
  REQUIRE(cyclact_dataset_make(5, 0, 0, cones, 3, &d) == CYCLACT_OK);
  std::string first, second;
  for (std::string *slot : {&first, &second}) {
    cyclact_matrix *m = nullptr;
    REQUIRE(cyclact_rep_type1(d, "interleaved", &m) == CYCLACT_OK);
    char *j = nullptr;
    REQUIRE(cyclact_matrix_to_json(m, &j) == CYCLACT_OK);
    *slot = take(j);
    cyclact_matrix_free(m);
  }
  CHECK(first == second);
  cyclact_dataset_free(d);
}

TEST_CASE("selftest is green") {
  char *report = nullptr;
  CHECK(cyclact_selftest(&report) == CYCLACT_OK);
  std::string s = take(report);
  CHECK(s.find("FAIL") == std::string::npos);
}
