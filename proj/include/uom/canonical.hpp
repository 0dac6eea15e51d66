#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uom/core.hpp"

namespace uom {

/// Canonical labeling of a matrix under row/column permutation and
/// involution-respecting renaming. Two matrices are equivalent iff their
/// encodings are byte-equal.
struct CanonicalForm {
  std::string encoded;
  std::vector<int> row_perm;   // original row -> canonical index
  std::vector<int> col_order;  // canonical index -> original column

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.encoded == b.encoded;
  }
};

/// Minimizes the encoded symbol over row labelings (partition refinement with
/// individualization; discovered automorphisms prune symmetric branches).
/// Column order, class order and pair orientation are forced by sorting, so
/// only row labelings are searched.
CanonicalForm canonical_form(const FormalMatrix& X);

struct EquivalenceWitness {
  std::vector<int> row_perm;          // row i of X appears as row row_perm[i] of Y
  std::vector<int> col_perm;          // column j of X appears as column col_perm[j] of Y
  std::map<VarRef, VarRef> renaming;  // X variable -> Y variable, involution-respecting
};

/// Exact witness mapping X to Y, or nothing iff the canonical forms differ.
std::optional<EquivalenceWitness> are_equivalent(const FormalMatrix& X, const FormalMatrix& Y);

}  // namespace uom
