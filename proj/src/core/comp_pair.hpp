#pragma once
#include "core/fatgraph.hpp"
#include "core/homology.hpp"

namespace cyclact {

// Psi(D) for D = ((D1,D2,(r,s))). Basis: B(P_{D1}) pairs, then the A-1
// connector pairs across the gluing annuli, then B(P_{D2}) pairs, all
// interleaved (l,m). Fixed-point compatibilities (A=1) reduce to the block
// diagonal.
IntMatrix rep_comp_pair(const DataSet &a, const DataSet &b, int r, int s);

} // namespace cyclact
