#pragma once

#include <optional>
#include <vector>

#include "uom/core.hpp"

namespace uom {

/// Lemma 4 extension search: a row orthogonal to every row of X, built from
/// perpendiculars of occurring variables, or nothing iff X is unextendible.
std::optional<Row> find_extension_row(const FormalMatrix& X);

bool is_uom(const FormalMatrix& X);

struct OrthogonalRowSet {
  std::vector<Row> rows;               // lexicographic by encoded row
  std::vector<int> wildcard_columns;   // columns omissible from some cover
  bool exhaustive() const { return wildcard_columns.empty(); }
};

/// All rows orthogonal to Y whose entries are perpendiculars of occurring
/// variables. When wildcard_columns is empty this is every orthogonal row
/// (Lemma 15 regime); otherwise fresh-variable families exist in the listed
/// columns and the list is exhaustive only over candidate entries.
OrthogonalRowSet enumerate_orthogonal_rows(const FormalMatrix& Y);

/// Exact maximum size of a mutually orthogonal subset (clique search).
int max_mutually_orthogonal(const std::vector<Row>& rows);

struct DiagnosticsReport {
  bool perp_occurs = false;          // (i) x'_{i,j} occurs for all i,j
  bool row_bound_s1 = false;         // (ii) mu(x) <= m-n for every variable
  bool row_bound_s2 = false;         // (ii) spot-check: pairs across two columns
  bool row_perp_sum = false;         // (iii) sum_j mu(x'_{i,j}) >= m-1 per row
  bool pivot_row_exists = false;     // (iv) the row r for column 1
  bool submatrix_bound = false;      // (v) d <= m-n+k for |S| = k <= k_max
  bool pair_product_sum = false;     // (vi) sum p_j >= m(m-1)/2
  bool corollary6_applies = false;   // m == n+1 with n odd
  bool corollary6_agrees = true;     // mu==1 test matches the general search
  int mu_max = 0;
  long long pair_product_total = 0;  // sum_j p_j
  bool all_pass() const {
    return perp_occurs && row_bound_s1 && row_bound_s2 && row_perp_sum && pivot_row_exists &&
           submatrix_bound && pair_product_sum && corollary6_agrees;
  }
};

/// Lemma 5 battery. Every check is a necessary condition for a UOM, so any
/// failure refutes a UOM claim. k_max bounds the column-subset size in (v).
DiagnosticsReport uom_diagnostics(const FormalMatrix& X, int k_max = 3);

struct Decomposition {
  std::vector<int> columns;        // the column subset carrying A
  FormalMatrix head;               // A, one row per block
  std::vector<FormalMatrix> blocks;
};

struct DecompositionProbe {
  bool reducible = false;          // some nu_j(X) == 1
  std::optional<Decomposition> decomposition;
};

/// Searches column subsets of size <= budget for a block structure
/// A |= (B_1, ..., B_r). Absence of a witness within budget proves
/// indecomposability only when budget >= n-1.
DecompositionProbe decomposition_probe(const FormalMatrix& X, int budget = 3);

}  // namespace uom
