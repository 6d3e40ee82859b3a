#pragma once
#include "core/dataset.hpp"

#include <memory>

namespace cyclact {

// Decomposition tree of a data set into irreducible Type 1 leaves through the
// four compatibility constructors.
struct DecompNode {
  enum class Kind { Leaf, Self, TrivialSelf, Pair, TrivialPair };
  Kind kind = Kind::Leaf;
  DataSet value;  // data set this node evaluates to (canonical)
  // Leaf: value is an irreducible Type 1 set
  // Self: child[0], indices (r,s) of the removed cone pair in the child
  // TrivialSelf: child[0], count = g'
  // Pair: child[0], child[1], (r,s) glued cone indices (1-based, canonical)
  // TrivialPair: child[0], child[1]
  std::vector<std::unique_ptr<DecompNode>> child;
  int r = 0, s = 0;
  i64 count = 0;
};

struct Decomposition {
  std::unique_ptr<DecompNode> root;
  // number of trivial handles added on top of the input before decomposing
  // (1 exactly when the input required the irreducible Type 2 construction)
  i64 handles_added = 0;
  DataSet input;  // canonical input

  DataSet evaluate() const;  // recompute the root value bottom-up
};

// Search driver; deterministic. `budget` caps node expansions.
Decomposition decompose(const DataSet &d, i64 budget = 2'000'000);

} // namespace cyclact
