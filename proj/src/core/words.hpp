#pragma once
#include "core/intutil.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cyclact {

// A word over signed letters: entry +k / -k is letter k / its inverse, k >= 1.
using SignedWord = std::vector<int>;

SignedWord free_reduce(const SignedWord &w);
SignedWord cyclic_reduce(const SignedWord &w);
SignedWord inverse_word(const SignedWord &w);

// exponent-sum vector over letters 1..n_letters
std::vector<i64> abelianize(const SignedWord &w, int n_letters);

// Interleaved pattern a...b...a^-1...b^-1 read cyclically; slot positions in
// cyclic order starting at the a-slot.  Blocks QaRbSa^-1Tb^-1U refer to the
// linearization with Q empty.
struct InterleavedPattern {
  int pa, pb, pa2, pb2;  // positions of a, b, a^-1, b^-1
};

// The first interleaved pair that is not already a canonical handle block,
// in (pa, pb2, pb) order; nullopt when none exists.
std::optional<InterleavedPattern> find_interleaved_pair(const SignedWord &w);

// One handle-normalization move applied at a chosen pattern:
// QaRbSa^-1Tb^-1U -> QTSRU x y x^-1 y^-1 with
//   x ~ U^-1 R^-1 a^-1 T b^-1 U (the proof's z), y ~ Q T b^-1 U.
struct StepResult {
  SignedWord word;     // transformed word (new letters use the given ids)
  SignedWord x_word;   // homotopy representative of x over old letters
  SignedWord y_word;   // of y
};
StepResult normalize_step_at(const SignedWord &w, const InterleavedPattern &p,
                             int x_id, int y_id);

// One step at the default scan position; error NoPair if none.
StepResult normalize_step(const SignedWord &w, int x_id, int y_id);

// Composite normalization output. The basis pairs (l_i, m_i) are abelianized
// vectors over the original letters; `word` is the canonical form
// prod [l_i, m_i] over fresh letter ids 1..2g.
struct Normalized {
  SignedWord word;
  std::vector<std::vector<i64>> basis;  // 2g rows: l1, m1, ..., lg, mg
  int steps = 0;
  // last-step non-abelian representatives (x, y) when at least one step ran
  std::optional<std::pair<SignedWord, SignedWord>> last_step_words;
};

// Policy differs between the two polygon families; see polygon.hpp. The
// generic entry point defaults to the 2n-family convention.
Normalized normalize_full(const SignedWord &w, int n_letters, bool family2n = true);

std::string letter_str(int lit, const std::vector<std::string> &names);
std::string word_str(const SignedWord &w, const std::vector<std::string> &names);

} // namespace cyclact
