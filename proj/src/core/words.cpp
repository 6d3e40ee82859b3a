#include "core/words.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace cyclact {

SignedWord free_reduce(const SignedWord &w) {
  SignedWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  return out;
}

SignedWord cyclic_reduce(const SignedWord &w) {
  SignedWord v = free_reduce(w);
  while (v.size() >= 2 && v.front() == -v.back()) {
    v.erase(v.begin());
    v.pop_back();
    v = free_reduce(v);
  }
  return v;
}

SignedWord inverse_word(const SignedWord &w) {
  SignedWord out(w.rbegin(), w.rend());
  for (int &x : out) x = -x;
  return out;
}

std::vector<i64> abelianize(const SignedWord &w, int n_letters) {
  std::vector<i64> v(n_letters, 0);
  for (int x : w) {
    int id = x > 0 ? x : -x;
    if (id < 1 || id > n_letters) fail("BadLetter", "letter id out of range");
    v[id - 1] += (x > 0) ? 1 : -1;
  }
  return v;
}

static void check_orientable(const SignedWord &w) {
  std::map<int, std::pair<int, int>> occ;  // id -> (count +, count -)
  for (int x : w) {
    auto &p = occ[std::abs(x)];
    (x > 0 ? p.first : p.second)++;
  }
  for (auto &[id, p] : occ)
    if (p.first != 1 || p.second != 1)
      fail("NonOrientableWord", "letter " + std::to_string(id) + " does not appear once with each sign");
}

static bool canonical_block_at(const SignedWord &w, int i) {
  int k = (int)w.size();
  return w[(i + 2) % k] == -w[i] && w[(i + 3) % k] == -w[(i + 1) % k];
}

// slots occupy four cyclically consecutive positions of an existing block
static bool is_block_candidate(const SignedWord &w, const InterleavedPattern &p) {
  int k = (int)w.size();
  int sl[4] = {p.pa % k, p.pb % k, p.pa2 % k, p.pb2 % k};
  std::sort(sl, sl + 4);
  for (int st = 0; st < k; ++st) {
    int t[4] = {st, (st + 1) % k, (st + 2) % k, (st + 3) % k};
    std::sort(t, t + 4);
    if (std::equal(sl, sl + 4, t)) return canonical_block_at(w, st) ||
                                          canonical_block_at(w, (st + 1) % k) ||
                                          canonical_block_at(w, (st + 2) % k) ||
                                          canonical_block_at(w, (st + 3) % k);
  }
  return false;
}

static std::vector<InterleavedPattern> all_patterns(const SignedWord &w) {
  int k = (int)w.size();
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[w[i]] = i;
  std::vector<InterleavedPattern> out;
  for (int pa = 0; pa < k; ++pa) {
    int pa2 = pos.at(-w[pa]);
    int da = (pa2 - pa + k) % k;
    for (int db1 = 1; db1 < da; ++db1) {
      int pb = (pa + db1) % k;
      int pb2 = pos.at(-w[pb]);
      int db2 = (pb2 - pa + k) % k;
      if (db2 > da) {
        InterleavedPattern p{pa, pb, pa2, pb2};
        if (!is_block_candidate(w, p)) out.push_back(p);
      }
    }
  }
  return out;
}

std::optional<InterleavedPattern> find_interleaved_pair(const SignedWord &w) {
  check_orientable(w);
  auto pats = all_patterns(w);
  if (pats.empty()) return std::nullopt;
  return *std::min_element(pats.begin(), pats.end(),
                           [](const InterleavedPattern &a, const InterleavedPattern &b) {
                             return std::tuple(a.pa, a.pb2, a.pb) < std::tuple(b.pa, b.pb2, b.pb);
                           });
}

static SignedWord segment(const SignedWord &w, int i, int j) {
  int k = (int)w.size();
  SignedWord out;
  for (int p = (i + 1) % k; p != j; p = (p + 1) % k) out.push_back(w[p]);
  return out;
}

StepResult normalize_step_at(const SignedWord &w, const InterleavedPattern &p,
                             int x_id, int y_id) {
  int a = w[p.pa], b = w[p.pb];
  SignedWord R = segment(w, p.pa, p.pb);
  SignedWord S = segment(w, p.pb, p.pa2);
  SignedWord T = segment(w, p.pa2, p.pb2);
  SignedWord U = segment(w, p.pb2, p.pa);  // rest block: Q taken empty
  StepResult res;
  // y ~ Q T b^-1 U ; x(=z) ~ U^-1 R^-1 a^-1 T b^-1 U
  res.y_word = T;
  res.y_word.push_back(-b);
  res.y_word.insert(res.y_word.end(), U.begin(), U.end());
  res.x_word = inverse_word(U);
  SignedWord Ri = inverse_word(R);
  res.x_word.insert(res.x_word.end(), Ri.begin(), Ri.end());
  res.x_word.push_back(-a);
  res.x_word.insert(res.x_word.end(), T.begin(), T.end());
  res.x_word.push_back(-b);
  res.x_word.insert(res.x_word.end(), U.begin(), U.end());
  // W' = (Q) T S R U x y x^-1 y^-1
  res.word = T;
  res.word.insert(res.word.end(), S.begin(), S.end());
  res.word.insert(res.word.end(), R.begin(), R.end());
  res.word.insert(res.word.end(), U.begin(), U.end());
  res.word.push_back(x_id);
  res.word.push_back(y_id);
  res.word.push_back(-x_id);
  res.word.push_back(-y_id);
  return res;
}

StepResult normalize_step(const SignedWord &w, int x_id, int y_id) {
  auto p = find_interleaved_pair(cyclic_reduce(w));
  if (!p) fail("NoPair", "no interleaved pair");
  return normalize_step_at(cyclic_reduce(w), *p, x_id, y_id);
}

// splice out a separated pair x ... x^-1 whose gap is internally paired
// (classical vertex merge); returns true if a move was applied
static bool splice_separated_pair(SignedWord &w) {
  int k = (int)w.size();
  std::map<int, int> pos;
  for (int i = 0; i < k; ++i) pos[w[i]] = i;
  int best_i = -1, best_j = -1, best_gap = k + 1;
  for (int i = 0; i < k; ++i) {
    int j = pos.at(-w[i]);
    int gap = (j - i + k) % k;
    std::map<int, int> cnt;
    bool ok = true;
    for (int t = 1; t < gap; ++t) cnt[std::abs(w[(i + t) % k])]++;
    for (auto &[id, c] : cnt)
      if (c != 2) { ok = false; break; }
    if (ok && gap >= 2 && gap < best_gap) { best_gap = gap; best_i = i; best_j = j; }
  }
  if (best_i < 0) return false;
  SignedWord out;
  for (int t = 1; t < k; ++t) {
    int p = (best_i + t) % k;
    if (p != best_j) out.push_back(w[p]);
  }
  w = out;
  return true;
}

Normalized normalize_full(const SignedWord &input, int n_letters, bool family2n) {
  SignedWord w = cyclic_reduce(input);
  check_orientable(w);
  // expressions of every live letter over the original letters
  std::map<int, std::vector<i64>> expr;
  for (int i = 1; i <= n_letters; ++i) {
    std::vector<i64> v(n_letters, 0);
    v[i - 1] = 1;
    expr[i] = v;
  }
  auto word_ab = [&](const SignedWord &ws) {
    std::vector<i64> v(n_letters, 0);
    for (int x : ws) {
      auto it = expr.find(std::abs(x));
      if (it == expr.end()) fail("BadLetter", "unknown letter in step output");
      i64 s = x > 0 ? 1 : -1;
      for (int t = 0; t < n_letters; ++t) v[t] += s * it->second[t];
    }
    return v;
  };
  int next_id = n_letters + 1;
  std::set<int> created;
  Normalized out;
  int guard = 0;
  std::optional<std::pair<SignedWord, SignedWord>> last;
  while (true) {
    if (++guard > 4 * (int)input.size() + 64) fail("Internal", "normalization did not terminate");
    w = cyclic_reduce(w);
    if (w.empty()) break;
    auto pats = all_patterns(w);
    if (pats.empty()) {
      if (splice_separated_pair(w)) continue;
      if (w.size() % 4 != 0) fail("NoPair", "word is not a polygon boundary word");
      break;
    }
    InterleavedPattern pick;
    if (family2n) {
      pick = *std::min_element(pats.begin(), pats.end(),
                               [](const InterleavedPattern &a, const InterleavedPattern &b) {
                                 return std::tuple(a.pa, a.pb2, a.pb) < std::tuple(b.pa, b.pb2, b.pb);
                               });
    } else {
      // maximize y abelianized lexicographically, then minimize x(z)
      auto key = [&](const InterleavedPattern &p) {
        auto st = normalize_step_at(w, p, next_id, next_id + 1);
        auto yv = word_ab(st.y_word);
        auto zv = word_ab(st.x_word);
        for (auto &t : yv) t = -t;
        return std::pair(yv, zv);
      };
      pick = *std::min_element(pats.begin(), pats.end(),
                               [&](const InterleavedPattern &a, const InterleavedPattern &b) {
                                 return key(a) < key(b);
                               });
    }
    int x_id = next_id++, y_id = next_id++;
    auto st = normalize_step_at(w, pick, x_id, y_id);
    expr[x_id] = word_ab(st.x_word);
    expr[y_id] = word_ab(st.y_word);
    created.insert(x_id);
    created.insert(y_id);
    last = {st.x_word, st.y_word};
    w = st.word;
    out.steps++;
  }
  out.last_step_words = last;
  // parse the final word into canonical blocks, rotate so a block starts at 0
  int k = (int)w.size();
  if (k % 4 != 0) fail("Internal", "canonical word length not divisible by 4");
  int g = k / 4;
  int rot = -1;
  for (int i = 0; i < k && rot < 0; ++i) {
    bool ok = true;
    for (int t = 0; t < g && ok; ++t) ok = canonical_block_at(w, (i + 4 * t) % k);
    if (ok) rot = i;
  }
  if (rot < 0 && k > 0) fail("Internal", "final word is not a product of commutators");
  std::rotate(w.begin(), w.begin() + (rot < 0 ? 0 : rot), w.end());
  // basis: blocks carry (P,Q) with P the x slot; step-created blocks are
  // read per family and numbered in reverse creation order, untouched blocks
  // keep their labels and come first in word order
  std::vector<std::pair<std::vector<i64>, std::vector<i64>>> untouched;
  std::vector<std::pair<int, std::pair<std::vector<i64>, std::vector<i64>>>> made;
  for (int i = 0; i < g; ++i) {
    int P = w[4 * i], Q = w[4 * i + 1];
    auto val = [&](int lit) {
      auto v = expr.at(std::abs(lit));
      if (lit < 0)
        for (auto &t : v) t = -t;
      return v;
    };
    auto Pv = val(P), Qv = val(Q);
    if (created.count(std::abs(P))) {
      if (!family2n)
        for (auto &t : Pv) t = -t;
      made.push_back({std::abs(P), {Qv, Pv}});
    } else {
      untouched.push_back({Pv, Qv});
    }
  }
  std::sort(made.begin(), made.end(),
            [](const auto &a, const auto &b) { return a.first > b.first; });
  auto pairs = untouched;
  for (auto &[rank, pr] : made) pairs.push_back(pr);
  for (auto &[l, m] : pairs) {
    out.basis.push_back(l);
    out.basis.push_back(m);
  }
  // canonical word over fresh ids 1..2g in the (l_i, m_i) labelling
  out.word.clear();
  for (int i = 0; i < g; ++i) {
    int l = 2 * i + 1, m = 2 * i + 2;
    out.word.push_back(l);
    out.word.push_back(m);
    out.word.push_back(-l);
    out.word.push_back(-m);
  }
  return out;
}

std::string letter_str(int lit, const std::vector<std::string> &names) {
  int id = std::abs(lit);
  std::string nm = (id >= 1 && id <= (int)names.size()) ? names[id - 1] : ("t" + std::to_string(id));
  return lit > 0 ? nm : nm + "^-1";
}

std::string word_str(const SignedWord &w, const std::vector<std::string> &names) {
  std::ostringstream os;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << " ";
    os << letter_str(w[i], names);
  }
  return os.str();
}

} // namespace cyclact
