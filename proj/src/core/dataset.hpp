#pragma once
#include "core/intutil.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cyclact {

struct ConePoint {
  i64 c = 0;  // residue mod n_i, 1 <= c < n_i, gcd(c,n_i)=1
  i64 n = 0;  // branch order, divides the degree
  friend bool operator==(const ConePoint &, const ConePoint &) = default;
  friend auto operator<=>(const ConePoint &a, const ConePoint &b) {
    if (a.n != b.n) return a.n <=> b.n;
    return a.c <=> b.c;
  }
};

// Branch data of a C_n action: (n, g0, r; (c_1,n_1),...,(c_l,n_l)).
// Cone points are kept sorted by (n_i, c_i); equality is canonical equality.
struct DataSet {
  i64 n = 1;
  i64 g0 = 0;
  i64 r = 0;
  std::vector<ConePoint> cones;

  i64 ell() const { return (i64)cones.size(); }
  friend bool operator==(const DataSet &, const DataSet &) = default;
  friend auto operator<=>(const DataSet &a, const DataSet &b) {
    if (a.n != b.n) return a.n <=> b.n;
    if (a.g0 != b.g0) return a.g0 <=> b.g0;
    if (a.r != b.r) return a.r <=> b.r;
    return a.cones <=> b.cones;
  }
  std::string str() const;
};

struct ValidationIssue {
  std::string code;   // ConditionViolated(i..iv), NonIntegralGenus, NegativeGenus
  std::string which;  // "i".."iv" for condition violations, else ""
  std::string detail;
};

struct ValidationReport {
  bool valid = false;
  std::optional<DataSet> dataset;  // canonical form when valid
  i64 genus = -1;
  std::vector<ValidationIssue> issues;
  std::vector<std::string> warnings;  // e.g. ambiguous n=2 rotational pattern
};

enum class ActionKind { Rotational, Type1, Type2 };

struct ActionClass {
  ActionKind kind;
  bool irreducible;  // three cone points and spherical quotient
};

DataSet canonicalize(DataSet d);

// Total validation of a raw tuple against the data-set conditions plus
// integrality/nonnegativity of the genus.
ValidationReport validate(i64 n, i64 g0, i64 r, const std::vector<ConePoint> &cones);

// Construct a validated data set or throw the first violation.
DataSet make_dataset(i64 n, i64 g0, i64 r, std::vector<ConePoint> cones);

i64 genus(const DataSet &d);
ActionClass classify(const DataSet &d);

// index pairs (r,s), 1-based, r<s, with n_r=n_s and c_r+c_s = 0 mod n_r
std::vector<std::pair<int, int>> self_compatible_indices(const DataSet &d);

DataSet compose_self(const DataSet &d, int r, int s);
DataSet compose_trivial_self(const DataSet &d, i64 gprime);
std::pair<DataSet, i64> strip_trivial_handles(const DataSet &d);
bool pair_compatible(const DataSet &a, const DataSet &b, int r, int s);
DataSet compose_pair(const DataSet &a, const DataSet &b, int r, int s);
DataSet compose_trivial_pair(const DataSet &a, const DataSet &b);

// all valid data sets of degree n and genus g, in canonical order
std::vector<DataSet> enumerate_datasets(i64 n, i64 g);

// reduction-system sizes (Type 1 data sets / compatible pairs)
i64 reduction_system_size(const DataSet &d);
i64 reduction_system_size_pair(const DataSet &a, const DataSet &b, int r, int s);

} // namespace cyclact
