#pragma once
#include "core/homology.hpp"

namespace cyclact {

// Distinguished full-order cone pair satisfying c_i + c_j = c_i c_j (mod n);
// such data sets carry a degree-n root of a Dehn twist about a nonseparating
// curve after a twisted 1-handle attachment.
bool is_root_realizing(const DataSet &d);

// the first valid distinguished index pair (i<j, 1-based) in canonical order
std::pair<int, int> root_realizing_indices(const DataSet &d);

// Prop. split of a root realizing set with l >= 4 into the compatible pair
// (D1, D2); recomposition at (l-1, 1) returns the input.
std::pair<DataSet, DataSet> split_root(const DataSet &d);

struct RootRep {
  IntMatrix M;        // (2g+2) x (2g+2), interleaved (l1,m1,...,l_{g+1},m_{g+1})
  IntMatrix E;        // 2g x 2g = Psi(D)
  IntMatrix B;        // 2g x 2: surface parts of the images of l_{g+1}, m_{g+1}
  IntMatrix C;        // 2 x 2g: handle parts of the surface images (symplectic closure)
};

// Psi of the degree-n root of a nonseparating-curve twist attached to a Type 1
// root realizing action D = (2g+1, 0; (a,n),(b,n),(c,n)).
RootRep rep_root_nonsep(const DataSet &d);

// Root realizing action pair for a separating curve: distinguished fixed
// points (full-order cones) i1 of a and i2 of b with angle sum 2*pi/n,
// n = lcm(n(a), n(b)). Blocks via the Type 1 representation.
IntMatrix rep_root_sep(const DataSet &a, int i1, const DataSet &b, int i2);
bool root_pair_condition(const DataSet &a, int i1, const DataSet &b, int i2);

} // namespace cyclact
