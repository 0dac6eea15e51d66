#include "uom/symbol.hpp"

#include <algorithm>
#include <map>

namespace uom {

SymbolOmega symbol(const FormalMatrix& X) {
  SymbolOmega s;
  s.m = X.rows();
  s.columns.resize(X.cols());
  for (int j = 0; j < X.cols(); ++j) {
    std::map<int, SymbolOmega::Pair> by_id;
    for (int i = 0; i < X.rows(); ++i) {
      const VarRef& e = X.at(i, j);
      auto& pr = by_id[e.id];
      (e.primed ? pr.second : pr.first).push_back(i);
    }
    for (auto& [id, pr] : by_id) {
      if (pr.second < pr.first) std::swap(pr.first, pr.second);
      s.columns[j].push_back(std::move(pr));
    }
  }
  return s;
}

FormalMatrix reconstruct(const SymbolOmega& s) {
  std::vector<Row> rows(s.m);
  for (int i = 0; i < s.m; ++i) rows[i].resize(s.columns.size());
  for (size_t j = 0; j < s.columns.size(); ++j) {
    int id = 0;
    for (const auto& pr : s.columns[j]) {
      for (int i : pr.first) rows[i][j] = VarRef{static_cast<int>(j), id, false};
      for (int i : pr.second) rows[i][j] = VarRef{static_cast<int>(j), id, true};
      ++id;
    }
  }
  return FormalMatrix::from_rows(rows);
}

}  // namespace uom
