#pragma once
#include "core/intmatrix.hpp"
#include "core/polygon.hpp"

namespace cyclact {

// CW chain data of a side-paired polygon: letters as 1-cells over vertex
// classes, plus the symplectic basis produced by handle normalization.
struct CycleLattice {
  int n_letters = 0;
  std::vector<std::vector<i64>> boundary;  // rows: vertex classes, cols: letters
  std::vector<std::vector<i64>> basis;     // 2g letter-vectors: l1,m1,...,lg,mg
  SignedWord polygon_word;                 // the word the lattice was built from
  std::vector<std::string> letter_names;
};

CycleLattice cycle_lattice(const SidePairedPolygon &p);

// coordinates of a letter-vector cycle in the lattice basis (exact; errors
// with IntegralSolveFailed when v is not an integral combination)
std::vector<i64> solve_in_basis(const CycleLattice &lat, const std::vector<i64> &v);

// algebraic intersection number of two cycles given as letter-vectors, for
// the surface of a side-paired polygon word (chord-dual evaluation)
i64 intersection_number(const SignedWord &word, int n_letters,
                        const std::vector<i64> &c, const std::vector<i64> &d);

// image of a letter-vector under a signed letter permutation
std::vector<i64> apply_perm(const SignedPerm &perm, const std::vector<i64> &v);

// Psi(D) for a Type 1 data set, interleaved basis (l1,m1,...)
IntMatrix rep_type1(const DataSet &d);
IntMatrix rep_type1(const SidePairedPolygon &p);

// block diagonal of an (r,s)-compatible pair across fixed points
IntMatrix rep_direct_sum(const DataSet &a, const DataSet &b, int r, int s);

// Psi for Type 1 sets and the identity action (n=1); building block for
// direct sums and separating-curve roots
IntMatrix rep_of(const DataSet &d);

} // namespace cyclact
