#pragma once
#include "core/dataset.hpp"
#include "core/words.hpp"

#include <string>
#include <vector>

namespace cyclact {

// Side-paired polygon realizing a Type 1 action as a boundary rotation.
// Sides are positions 0..k-1 counter-clockwise; `word[p]` holds the signed
// letter on side p (each letter appears once with each sign); `pairing[p]`
// is the glued partner position. `shift` is the rotation in side positions.
struct SidePairedPolygon {
  i64 n = 1;                       // order of the distinguished rotation
  int k = 0;                       // number of sides
  SignedWord word;                 // boundary word
  std::vector<int> pairing;        // fixed-point-free involution on positions
  int shift = 0;                   // rotation by `shift` positions = theta_D
  int n_letters = 0;
  std::vector<std::string> letter_names;
  bool family2n = true;            // k(D) = 2n-family vs n-family
  DataSet source;                  // cone order used for the construction
};

// Signed permutation of letters: image[i] = signed letter image of letter i+1.
struct SignedPerm {
  std::vector<int> image;
  int apply(int lit) const {
    int v = image.at(std::abs(lit) - 1);
    return lit > 0 ? v : -v;
  }
};

// Build P_D for a Type 1 data set. Cone points are reordered so that the
// third has full order (the last full-order cone in canonical order) and an
// order-2 cone, if present alone, sits first.
SidePairedPolygon build_polygon(const DataSet &d);

// As above with the cone order taken literally: cones[2].n must equal n.
SidePairedPolygon build_polygon_ordered(const DataSet &d);

// genus of the quotient surface via V - E + F
i64 quotient_genus(const SidePairedPolygon &p);

// vertex classes as lists of polygon vertex indices (vertex v sits between
// sides v-1 and v)
std::vector<std::vector<int>> vertex_classes(const SidePairedPolygon &p);

// the signed letter permutation induced by the rotation
SignedPerm rotation_action(const SidePairedPolygon &p);

// order of the rotation by `shift` positions
i64 rotation_order(const SidePairedPolygon &p, int shift);

// Recover the branch data of the rotation by `shift` positions (defaults to
// the distinguished rotation). Errors with NotAnAction if the shift does not
// respect the pairing.
DataSet realized_data_set(const SidePairedPolygon &p);
DataSet realized_data_set(const SidePairedPolygon &p, int shift);

// polygon boundary word normalization with the family policy applied
Normalized normalize_polygon(const SidePairedPolygon &p);

} // namespace cyclact
