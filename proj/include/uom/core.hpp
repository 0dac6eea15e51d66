#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uom/error.hpp"

namespace uom {

/// One occurrence of a vector variable. Variables are scoped to their column:
/// (column, id) names an independent variable, `primed` selects it or its
/// perpendicular partner. The involution flips `primed` and has no fixed point.
struct VarRef {
  int column = 0;
  int id = 0;
  bool primed = false;

  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

inline VarRef perp(VarRef v) { return {v.column, v.id, !v.primed}; }

/// True unless the two refs are the same variable or perpendicular partners.
inline bool independent(VarRef a, VarRef b) { return a.column != b.column || a.id != b.id; }

using Row = std::vector<VarRef>;

/// An m x n grid of VarRef with per-column variable scoping (the M(m,n)
/// condition: a variable and its perpendicular live in exactly one column).
class FormalMatrix {
 public:
  FormalMatrix() = default;
  FormalMatrix(int m, int n, std::vector<VarRef> entries);

  static FormalMatrix from_rows(const std::vector<Row>& rows);

  int rows() const { return m_; }
  int cols() const { return n_; }
  const VarRef& at(int i, int j) const { return entries_[static_cast<size_t>(i) * n_ + j]; }
  Row row(int i) const;
  std::vector<Row> row_list() const;

  /// Ids occurring in column j, ascending.
  std::vector<int> column_ids(int j) const;

  /// Renumber ids per column to first-appearance order (the canonical
  /// serialization labels, stable for golden files).
  FormalMatrix normalized() const;

  FormalMatrix without_rows(const std::vector<int>& drop) const;
  FormalMatrix with_row(const Row& r) const;
  FormalMatrix sub_columns(const std::vector<int>& keep) const;

  friend bool operator==(const FormalMatrix&, const FormalMatrix&) = default;

 private:
  int m_ = 0, n_ = 0;
  std::vector<VarRef> entries_;  // row-major
};

bool rows_orthogonal(const Row& r1, const Row& r2);
bool is_orthogonal_matrix(const FormalMatrix& X);

/// Occurrence counts and the balance flag of Sec. II.
struct MatrixStats {
  std::map<VarRef, int> mu;        // occurrence count per variable side
  int mu_max = 0;                  // mu(X)
  std::vector<int> nu_per_column;  // nu_j(X)
  int nu_total = 0;                // nu(X)
  bool balanced = false;           // mu(x) == mu(x') throughout
};

MatrixStats stats(const FormalMatrix& X);

inline int mu_of(const MatrixStats& s, VarRef v) {
  auto it = s.mu.find(v);
  return it == s.mu.end() ? 0 : it->second;
}

// ---- text formats -------------------------------------------------------
//
// Compact: one row per line, char k is column k, case encodes the prime,
// letters are per-column namespaces. Extended: whitespace-separated tokens
// `name` / `name'` for columns needing more than 26 ids.

FormalMatrix parse_matrix(const std::string& text);
FormalMatrix parse_rows(const std::vector<std::string>& lines);
std::string serialize_matrix(const FormalMatrix& X);

std::string to_json(const FormalMatrix& X);
FormalMatrix matrix_from_json(const std::string& json_text);

}  // namespace uom
