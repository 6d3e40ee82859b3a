#pragma once
#include "core/dataset.hpp"
#include "core/polygon.hpp"

#include <string>
#include <vector>

namespace cyclact {

// Fat graph (E, ~, sigma1, sigma0). Directed edges are 2i (positive side of
// undirected edge i) and 2i+1 (its reversal); sigma1 is the implicit
// involution d ^ 1; vertices are the sigma0 cycles.
struct FatGraph {
  int n_undirected = 0;
  std::vector<int> sigma0;              // directed -> directed
  std::vector<std::string> edge_names;  // per undirected edge

  int n_directed() const { return 2 * n_undirected; }
  static int flip(int d) { return d ^ 1; }
  std::string dir_name(int d) const {
    return (d & 1) ? edge_names[d >> 1] + "^-1" : edge_names[d >> 1];
  }
  void validate() const;  // permutation, valency >= 3
};

// automorphism: a bijection on directed edges commuting with sigma0, sigma1
struct FatGraphMap {
  FatGraph graph;
  std::vector<int> map;  // directed -> directed
};

std::vector<std::vector<int>> fg_vertices(const FatGraph &g);
std::vector<std::vector<int>> boundary_components(const FatGraph &g);  // orbits of sigma1 sigma0^-1
i64 graph_genus(const FatGraph &g);  // errors with Disconnected
bool fg_connected(const FatGraph &g);

FatGraph from_polygon(const SidePairedPolygon &p);
FatGraphMap automorphism_from_rotation(const SidePairedPolygon &p);
FatGraphMap automorphism_from_rotation(const SidePairedPolygon &p, int shift);

void check_automorphism(const FatGraphMap &f);  // commutation with sigma0/1
i64 map_order(const FatGraphMap &f);
bool is_irreducible(const FatGraphMap &f, i64 n);

// branch data of the cyclic action generated by an automorphism of a
// one-boundary fat graph (the data-set recovery corollary)
DataSet dataset_from_automorphism(const FatGraphMap &f);

// Glued fat graph of an (r,s)-compatible pair of Type 1 actions, carried by
// the polygon realizations. Exposes the bookkeeping the symplectic layer
// needs: truncated boundary faces and connector arc indexing.
struct GluedPair {
  FatGraph graph;
  std::vector<int> automorphism;     // directed -> directed
  std::vector<std::vector<int>> faces;  // 2 faces as directed edge paths
  // undirected edge layout: [P1 letters][P2 letters][arcs 0..n-1]
  int n_letters1 = 0, n_letters2 = 0, n_arcs = 0;
  i64 orbit_size = 0;                // A(D1,D2)
  std::vector<std::vector<int>> circles;  // arc circles as directed arc paths
};

GluedPair glue_compatible(const SidePairedPolygon &p1, const SidePairedPolygon &p2,
                          int cone1, int cone2);

// convenience: glue from data sets with an (r,s)-compatibility
GluedPair glue_compatible(const DataSet &a, const DataSet &b, int r, int s);

} // namespace cyclact
