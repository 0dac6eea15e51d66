#pragma once

#include <vector>

#include "uom/core.hpp"

namespace uom {

struct ClassEnumeration {
  std::vector<FormalMatrix> representatives;  // canonical order
  bool complete = true;                       // false when the budget ran out
  long long intermediate_classes = 0;         // work indicator
};

/// Isomorph-free generation of all UOM equivalence classes in O(m,n):
/// orthogonal matrices are grown row by row with per-level canonical
/// deduplication, pruned by the UOM necessary conditions (mu <= m-n, every
/// perpendicular eventually present), then filtered by unextendibility.
/// budget_seconds <= 0 disables the budget.
ClassEnumeration enumerate_uom_classes(int m, int n, double budget_seconds = 0.0);

}  // namespace uom
