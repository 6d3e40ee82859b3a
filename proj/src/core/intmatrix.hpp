#pragma once
#include "core/intutil.hpp"
#include "core/rational.hpp"

#include <optional>
#include <vector>

namespace cyclact {

// Dense integer matrix; action convention is columns-are-images: the image
// of basis vector e_j is column j.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<i64> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c, 0) {}
  i64 &at(int i, int j) { return a[(size_t)i * cols + j]; }
  i64 at(int i, int j) const { return a[(size_t)i * cols + j]; }
  static IntMatrix identity(int n);
  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
};

IntMatrix matmul(const IntMatrix &A, const IntMatrix &B);
IntMatrix transpose(const IntMatrix &A);

// standard symplectic form in the interleaved basis (l1,m1,...,lg,mg)
IntMatrix symplectic_form(int g);
bool is_symplectic(const IntMatrix &M);

// multiplicative order; nullopt when it exceeds `bound`
std::optional<i64> matrix_order(const IntMatrix &M, i64 bound = 4096);

// reorder between interleaved (l1,m1,..,lg,mg) and split (l1..lg,m1..mg)
IntMatrix to_split_basis(const IntMatrix &M);

// Solve A x = b exactly over Q; nullopt when inconsistent. Free variables
// are set to zero (deterministic).
std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<i64>> &A,
                                               const std::vector<i64> &b);

// One elimination, many right-hand sides; out[j] is the solution for rhs j
// or nullopt when that system is inconsistent.
std::vector<std::optional<std::vector<Rat>>> solve_rational_multi(
    const std::vector<std::vector<i64>> &A, const std::vector<std::vector<i64>> &rhs);

// integer kernel basis of A x = 0 (columns of A indexed by variables)
std::vector<std::vector<i64>> integer_kernel(const std::vector<std::vector<i64>> &A);

// determinant of a square integer matrix (exact)
i64 det(const std::vector<std::vector<i64>> &A);

} // namespace cyclact
