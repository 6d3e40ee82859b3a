// Command-line front end for the cyclact shared library. Everything goes
// through the public C API; structured results are printed as JSON.
#include <CLI11.hpp>
#include <cyclact.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr const char *kVersion = "cyclact 0.1.0";

struct Cleanup {
  std::vector<cyclact_dataset *> ds;
  std::vector<cyclact_polygon *> ps;
  std::vector<cyclact_fatgraph *> gs;
  std::vector<cyclact_autom *> as;
  std::vector<cyclact_matrix *> ms;
  std::vector<cyclact_decomp *> cs;
  ~Cleanup() {
    for (auto *p : ds) cyclact_dataset_free(p);
    for (auto *p : ps) cyclact_polygon_free(p);
    for (auto *p : gs) cyclact_fatgraph_free(p);
    for (auto *p : as) cyclact_autom_free(p);
    for (auto *p : ms) cyclact_matrix_free(p);
    for (auto *p : cs) cyclact_decomp_free(p);
  }
};
Cleanup g_cleanup;

std::string g_out_file;
std::string g_dataset_json_file;
bool g_meta = false;

[[noreturn]] void die_domain() {
  std::ostringstream os;
  os << "{\"error\":\"" << cyclact_last_error_name() << "\",\"message\":\""
     << cyclact_last_error_message() << "\"}";
  std::cerr << os.str() << "\n";
  std::exit(1);
}

void require_ok(cyclact_status st) {
  if (st == CYCLACT_OK) return;
  if (st == CYCLACT_ERR_USAGE) {
    std::cerr << "usage error: " << cyclact_last_error_message() << "\n";
    std::exit(2);
  }
  die_domain();
}

std::string take_string(char *s) {
  std::string out = s ? s : "";
  cyclact_string_free(s);
  return out;
}

void emit(const std::string &payload) {
  if (g_meta) std::cerr << "{\"tool\":\"" << kVersion << "\"}" << "\n";
  if (!g_out_file.empty()) {
    std::ofstream f(g_out_file, std::ios::binary);
    if (!f) {
      std::cerr << "usage error: cannot open " << g_out_file << "\n";
      std::exit(2);
    }
    f << payload << "\n";
  } else {
    std::cout << payload << "\n";
  }
}

bool parse_cone(const std::string &tok, int64_t &c, int64_t &m) {
  auto slash = tok.find('/');
  if (slash == std::string::npos) return false;
  try {
    c = std::stoll(tok.substr(0, slash));
    m = std::stoll(tok.substr(slash + 1));
  } catch (...) {
    return false;
  }
  return true;
}

// tokens: n g0 [r] c1/m1 c2/m2 ...
struct RawDataSet {
  int64_t n = 0, g0 = 0, r = 0;
  std::vector<int64_t> cones;  // flat (c, m) pairs
  int n_cones = 0;
};

RawDataSet parse_tokens(const std::vector<std::string> &toks, bool with_r) {
  RawDataSet out;
  size_t need = with_r ? 3 : 2;
  if (toks.size() < need) {
    std::cerr << "usage error: expected n g0 " << (with_r ? "r " : "") << "c/m ...\n";
    std::exit(2);
  }
  try {
    out.n = std::stoll(toks[0]);
    out.g0 = std::stoll(toks[1]);
    if (with_r) out.r = std::stoll(toks[2]);
  } catch (...) {
    std::cerr << "usage error: bad integer argument\n";
    std::exit(2);
  }
  for (size_t i = need; i < toks.size(); ++i) {
    int64_t c, m;
    if (!parse_cone(toks[i], c, m)) {
      std::cerr << "usage error: cone points are c/m tokens, got '" << toks[i] << "'\n";
      std::exit(2);
    }
    out.cones.push_back(c);
    out.cones.push_back(m);
    ++out.n_cones;
  }
  return out;
}

std::string read_file(const std::string &path);

cyclact_dataset *dataset_from_tokens(const std::vector<std::string> &toks, bool with_r) {
  if (!g_dataset_json_file.empty()) {
    cyclact_dataset *d = nullptr;
    require_ok(cyclact_dataset_parse(read_file(g_dataset_json_file).c_str(), &d));
    g_cleanup.ds.push_back(d);
    return d;
  }
  auto raw = parse_tokens(toks, with_r);
  cyclact_dataset *d = nullptr;
  require_ok(cyclact_dataset_make(raw.n, raw.g0, raw.r,
                                  raw.cones.empty() ? nullptr : raw.cones.data(), raw.n_cones, &d));
  g_cleanup.ds.push_back(d);
  return d;
}

cyclact_dataset *dataset_from_jsonstr(const std::string &s) {
  cyclact_dataset *d = nullptr;
  require_ok(cyclact_dataset_parse(s.c_str(), &d));
  g_cleanup.ds.push_back(d);
  return d;
}

std::string read_file(const std::string &path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "usage error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

cyclact_polygon *polygon_of(cyclact_dataset *d) {
  cyclact_polygon *p = nullptr;
  require_ok(cyclact_build_polygon(d, &p));
  g_cleanup.ps.push_back(p);
  return p;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact realizations of cyclic surface actions and their symplectic representations"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.add_option("--out", g_out_file, "write the result to a file instead of stdout");
  app.add_option("--json", g_dataset_json_file, "read the data set from a JSON file instead of tokens");
  app.add_flag("--meta", g_meta, "print tool provenance on stderr");
  app.fallthrough();

  std::vector<std::string> toks;
  std::string json_file, svg_file, basis = "interleaved", curve = "nonsep", word_json;
  std::string d1_json, d2_json;
  int64_t budget = 0;
  int r_idx = 0, s_idx = 0, i1 = 0, i2 = 0;
  int64_t en_n = 0, en_g = 0;

  auto *validate = app.add_subcommand("validate", "check a raw tuple n g0 r c/m ...");
  validate->add_option("tokens", toks)->expected(-1);

  auto *enumerate = app.add_subcommand("enumerate", "all data sets of degree n and genus g");
  enumerate->add_option("n", en_n)->required();
  enumerate->add_option("g", en_g)->required();

  auto *classifyc = app.add_subcommand("classify", "classify n g0 r c/m ...");
  classifyc->add_option("tokens", toks)->expected(-1);

  auto *realize = app.add_subcommand("realize", "side-paired polygon of a Type 1 set: n g0 c/m ...");
  realize->add_option("tokens", toks)->expected(-1);
  realize->add_option("--svg", svg_file, "also write an SVG rendering");

  auto *fg = app.add_subcommand("fatgraph", "fat graph of a Type 1 set (or --json graph file)");
  fg->add_option("tokens", toks)->expected(-1);
  fg->add_option("--graph", json_file, "read a fat graph JSON file instead");

  auto *norm = app.add_subcommand("normalize", "handle normalization: n g0 c/m ... or --word");
  norm->add_option("tokens", toks)->expected(-1);
  norm->add_option("--word", word_json, "boundary word as a JSON array of signed letters");

  auto *rep = app.add_subcommand("rep", "symplectic representations");
  auto *rep_t1 = rep->add_subcommand("type1", "Psi of a Type 1 set: n g0 c/m ...");
  rep_t1->add_option("tokens", toks)->expected(-1);
  rep_t1->add_option("--basis", basis, "interleaved|split");
  auto *rep_pairc = rep->add_subcommand("pair", "Psi of a compatible pair: d1-json d2-json r s");
  rep_pairc->add_option("--d1", d1_json)->required();
  rep_pairc->add_option("--d2", d2_json)->required();
  rep_pairc->add_option("-r", r_idx)->required();
  rep_pairc->add_option("-s", s_idx)->required();
  rep_pairc->add_option("--basis", basis, "interleaved|split");
  auto *rep_sum = rep->add_subcommand("sum", "block diagonal across fixed points");
  rep_sum->add_option("--d1", d1_json)->required();
  rep_sum->add_option("--d2", d2_json)->required();
  rep_sum->add_option("-r", r_idx)->required();
  rep_sum->add_option("-s", s_idx)->required();
  rep_sum->add_option("--basis", basis, "interleaved|split");

  auto *root = app.add_subcommand("root", "roots of Dehn twists");
  auto *root_rep = root->add_subcommand("rep", "Psi of a twist root");
  root_rep->add_option("--curve", curve, "nonsep|sep");
  root_rep->add_option("tokens", toks, "nonsep: n g0 c/m ...")->expected(-1);
  root_rep->add_option("--d1", d1_json, "sep: first data set JSON");
  root_rep->add_option("--d2", d2_json, "sep: second data set JSON");
  root_rep->add_option("--i1", i1, "sep: distinguished cone index in d1");
  root_rep->add_option("--i2", i2, "sep: distinguished cone index in d2");
  root_rep->add_option("--basis", basis, "interleaved|split");
  auto *root_check = root->add_subcommand("check", "is the set root realizing: n g0 c/m ...");
  root_check->add_option("tokens", toks)->expected(-1);
  auto *root_split = root->add_subcommand("split", "compatible-pair split: n g0 c/m ...");
  root_split->add_option("tokens", toks)->expected(-1);

  auto *reduce = app.add_subcommand("reduce-size", "maximal reduction system size");
  reduce->add_option("tokens", toks, "Type 1: n g0 c/m ...")->expected(-1);
  reduce->add_option("--d1", d1_json, "pair: first data set JSON");
  reduce->add_option("--d2", d2_json, "pair: second data set JSON");
  reduce->add_option("-r", r_idx);
  reduce->add_option("-s", s_idx);

  auto *decomp = app.add_subcommand("decompose", "decomposition into Type 1 compatibilities");
  decomp->add_option("tokens", toks)->expected(-1);
  decomp->add_option("--budget", budget, "search budget");

  auto *render = app.add_subcommand("render", "SVG rendering of the polygon: n g0 c/m ...");
  render->add_option("tokens", toks)->expected(-1);
  render->add_option("--svg", svg_file, "output file (default stdout)");

  app.add_subcommand("selftest", "run the golden-example suite");

  CLI11_PARSE(app, argc, argv);
  auto *sub = app.get_subcommands().front();
  const std::string name = sub->get_name();

  if (name == "validate" || name == "classify") {
    if (!g_dataset_json_file.empty()) {
      auto *d = dataset_from_tokens({}, true);
      char *out = nullptr;
      if (name == "validate") {
        char *dj = nullptr;
        require_ok(cyclact_dataset_to_json(d, &dj));
        int64_t gg = 0;
        require_ok(cyclact_genus(d, &gg));
        cyclact_string_free(dj);
        emit("{\"valid\":true,\"genus\":" + std::to_string(gg) + "}");
        return 0;
      }
      require_ok(cyclact_classify(d, &out));
      emit(take_string(out));
      return 0;
    }
    auto raw = parse_tokens(toks, true);
    if (name == "validate") {
      char *rep_json = nullptr;
      require_ok(cyclact_validate(raw.n, raw.g0, raw.r,
                                  raw.cones.empty() ? nullptr : raw.cones.data(), raw.n_cones,
                                  &rep_json));
      std::string payload = take_string(rep_json);
      emit(payload);
      return payload.find("\"valid\":true") != std::string::npos ? 0 : 1;
    }
    cyclact_dataset *d = nullptr;
    require_ok(cyclact_dataset_make(raw.n, raw.g0, raw.r,
                                    raw.cones.empty() ? nullptr : raw.cones.data(), raw.n_cones, &d));
    g_cleanup.ds.push_back(d);
    char *out = nullptr;
    require_ok(cyclact_classify(d, &out));
    emit(take_string(out));
    return 0;
  }
  if (name == "enumerate") {
    char *out = nullptr;
    require_ok(cyclact_enumerate(en_n, en_g, &out));
    emit(take_string(out));
    return 0;
  }
  if (name == "realize") {
    auto *p = polygon_of(dataset_from_tokens(toks, false));
    char *out = nullptr;
    require_ok(cyclact_polygon_to_json(p, &out));
    emit(take_string(out));
    if (!svg_file.empty()) {
      char *svg = nullptr;
      require_ok(cyclact_polygon_render_svg(p, &svg));
      std::ofstream f(svg_file, std::ios::binary);
      f << take_string(svg);
    }
    return 0;
  }
  if (name == "fatgraph") {
    cyclact_fatgraph *g = nullptr;
    if (!json_file.empty()) {
      require_ok(cyclact_fatgraph_parse(read_file(json_file).c_str(), &g));
    } else {
      auto *p = polygon_of(dataset_from_tokens(toks, false));
      require_ok(cyclact_fatgraph_from_polygon(p, &g));
    }
    g_cleanup.gs.push_back(g);
    char *gj = nullptr, *bj = nullptr;
    int64_t genus = 0;
    require_ok(cyclact_fatgraph_to_json(g, &gj));
    require_ok(cyclact_fatgraph_boundaries(g, &bj));
    require_ok(cyclact_fatgraph_genus(g, &genus));
    std::ostringstream os;
    os << "{\"graph\":" << take_string(gj) << ",\"boundaries\":" << take_string(bj)
       << ",\"genus\":" << genus << "}";
    emit(os.str());
    return 0;
  }
  if (name == "normalize") {
    char *out = nullptr;
    if (!word_json.empty()) {
      require_ok(cyclact_normalize_word(word_json.c_str(), &out));
    } else {
      auto *p = polygon_of(dataset_from_tokens(toks, false));
      require_ok(cyclact_polygon_normalize(p, &out));
    }
    emit(take_string(out));
    return 0;
  }
  if (name == "rep") {
    auto *rsub = rep->get_subcommands().front();
    cyclact_matrix *m = nullptr;
    if (rsub->get_name() == "type1") {
      require_ok(cyclact_rep_type1(dataset_from_tokens(toks, false), basis.c_str(), &m));
    } else if (rsub->get_name() == "pair") {
      require_ok(cyclact_rep_comp_pair(dataset_from_jsonstr(d1_json), dataset_from_jsonstr(d2_json),
                                       r_idx, s_idx, basis.c_str(), &m));
    } else {
      require_ok(cyclact_rep_direct_sum(dataset_from_jsonstr(d1_json), dataset_from_jsonstr(d2_json),
                                        r_idx, s_idx, basis.c_str(), &m));
    }
    g_cleanup.ms.push_back(m);
    char *out = nullptr;
    require_ok(cyclact_matrix_to_json(m, &out));
    emit(take_string(out));
    return 0;
  }
  if (name == "root") {
    auto *rsub = root->get_subcommands().front();
    if (rsub->get_name() == "rep") {
      if (curve == "nonsep") {
        char *out = nullptr;
        require_ok(cyclact_rep_root_nonsep(dataset_from_tokens(toks, false), basis.c_str(), &out));
        emit(take_string(out));
      } else if (curve == "sep") {
        cyclact_matrix *m = nullptr;
        require_ok(cyclact_rep_root_sep(dataset_from_jsonstr(d1_json), i1,
                                        dataset_from_jsonstr(d2_json), i2, basis.c_str(), &m));
        g_cleanup.ms.push_back(m);
        char *out = nullptr;
        require_ok(cyclact_matrix_to_json(m, &out));
        emit(take_string(out));
      } else {
        std::cerr << "usage error: --curve must be nonsep or sep\n";
        return 2;
      }
      return 0;
    }
    auto *d = dataset_from_tokens(toks, false);
    if (rsub->get_name() == "check") {
      int ok = 0;
      require_ok(cyclact_is_root_realizing(d, &ok));
      emit(ok ? "{\"root_realizing\":true}" : "{\"root_realizing\":false}");
      return 0;
    }
    cyclact_dataset *a = nullptr, *b = nullptr;
    require_ok(cyclact_split_root(d, &a, &b));
    g_cleanup.ds.push_back(a);
    g_cleanup.ds.push_back(b);
    char *ja = nullptr, *jb = nullptr;
    require_ok(cyclact_dataset_to_json(a, &ja));
    require_ok(cyclact_dataset_to_json(b, &jb));
    emit("{\"d1\":" + take_string(ja) + ",\"d2\":" + take_string(jb) + "}");
    return 0;
  }
  if (name == "reduce-size") {
    int64_t sz = 0;
    if (!d1_json.empty()) {
      require_ok(cyclact_reduction_size_pair(dataset_from_jsonstr(d1_json),
                                             dataset_from_jsonstr(d2_json), r_idx, s_idx, &sz));
    } else {
      require_ok(cyclact_reduction_size(dataset_from_tokens(toks, false), &sz));
    }
    emit("{\"size\":" + std::to_string(sz) + "}");
    return 0;
  }
  if (name == "decompose") {
    cyclact_decomp *dc = nullptr;
    require_ok(cyclact_decompose(dataset_from_tokens(toks, false), budget, &dc));
    g_cleanup.cs.push_back(dc);
    char *out = nullptr;
    require_ok(cyclact_decomp_to_json(dc, &out));
    emit(take_string(out));
    return 0;
  }
  if (name == "render") {
    auto *p = polygon_of(dataset_from_tokens(toks, false));
    char *svg = nullptr;
    require_ok(cyclact_polygon_render_svg(p, &svg));
    std::string payload = take_string(svg);
    if (!svg_file.empty()) {
      std::ofstream f(svg_file, std::ios::binary);
      f << payload;
    } else {
      std::cout << payload;
    }
    return 0;
  }
  if (name == "selftest") {
    char *report = nullptr;
    auto st = cyclact_selftest(&report);
    std::string s = take_string(report);
    std::cout << s;
    if (st != CYCLACT_OK) {
      std::cerr << "selftest failed: " << cyclact_last_error_message() << "\n";
      return 1;
    }
    return 0;
  }
  std::cerr << "usage error: unknown subcommand\n";
  return 2;
}
