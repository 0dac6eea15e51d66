#pragma once

#include <utility>
#include <vector>

#include "uom/core.hpp"

namespace uom {

/// The per-column occurrence structure of Sec. IV: for every independent
/// variable class one unordered pair {rows of x, rows of x'}. Row sets are
/// kept sorted; the pair is stored with the lexicographically smaller side
/// first so that equal symbols compare equal.
struct SymbolOmega {
  using Pair = std::pair<std::vector<int>, std::vector<int>>;
  std::vector<std::vector<Pair>> columns;
  int m = 0;

  friend bool operator==(const SymbolOmega&, const SymbolOmega&) = default;
};

SymbolOmega symbol(const FormalMatrix& X);

/// Rebuild a matrix with this symbol; the result is equivalent to any matrix
/// the symbol came from.
FormalMatrix reconstruct(const SymbolOmega& s);

}  // namespace uom
