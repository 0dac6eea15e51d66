#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "uom/core.hpp"

namespace uom {

/// Block construction A |= (B_1, ..., B_r): row k of A is replicated over the
/// rows of B_k and the blocks are appended as extra columns. Orthogonal inputs
/// give an orthogonal output; the result is a UOM iff A and every B_k are.
FormalMatrix compose(const FormalMatrix& A, const std::vector<FormalMatrix>& blocks);

/// The (n+1) x n cyclic-shift matrix for odd n: first row
/// [0 1' 2' ... p' p ... 2 1] rotated down plus an all-perpendicular row,
/// entries renamed per column.
FormalMatrix genshift(int n);

/// p+1 permutations of {0..p} whose pairwise quotients are fixed-point-free.
class PermFamily {
 public:
  static PermFamily explicit_list(std::vector<std::vector<int>> perms);
  /// pi_j = sigma^j for j = 0..size-1; sigma given in one-line form.
  static PermFamily cyclic(const std::vector<int>& sigma);
  static PermFamily klein();  // {id, (12)(34), (13)(24), (14)(23)} on 4 points
  /// Left coset: {sigma  . pi : pi in base} with (f.g)(x) = f(g(x)).
  static PermFamily coset(const std::vector<int>& sigma, const PermFamily& base);

  int size() const { return static_cast<int>(perms_.size()); }
  const std::vector<std::vector<int>>& perms() const { return perms_; }

 private:
  std::vector<std::vector<int>> perms_;
};

/// Doubling (X1, X2) => Z in O(2m, m+n): a fresh m x m block Y1 over X1 and
/// its permuted perpendicular block Y2 over X2, Y2[i][j] = perp(Y1[pi_j(i)][j]).
/// The identity choice (cyclic rotations) is PermFamily::cyclic of i -> i-1.
FormalMatrix double_matrix(const FormalMatrix& X1, const FormalMatrix& X2,
                           const PermFamily& family);

/// The cyclic family the plain doubling construction uses (column j rotated
/// j steps down).
PermFamily rotation_family(int m);

/// Lemma 10 lifting: X = [X1 X2] split at column s, Y1 a p-extension of X1;
/// every row of Y1 is replicated over a full matrix in O(n-s) whose first row
/// (for the original rows) is the matching row of X2. Z blocks for the new
/// rows may be supplied, otherwise fresh sign-pattern blocks are used.
FormalMatrix lift_extension(const FormalMatrix& X, int split, const FormalMatrix& Y1,
                            const std::vector<Row>& z_first_rows = {});

struct OrderMove {
  int column = 0;
  int keep_id = 0;   // x
  int merge_id = 0;  // y, rewritten to x (or x' when flipped)
  bool flip = false;
};

/// Variable merge of Sec. VII; the result Y satisfies Y < X and stays
/// orthogonal whenever X is.
FormalMatrix merge_variables(const FormalMatrix& X, const OrderMove& move);

enum class OrderDirection { Down, Up };

/// Immediate neighbors in the merge order, deduplicated up to equivalence.
/// Down: every merge of two independent same-column classes, both flips.
/// Up: every 2-split of a class's occurrence sets that stays orthogonal.
std::vector<FormalMatrix> order_neighbors(const FormalMatrix& X, OrderDirection dir);

struct MaximalityStatus {
  bool maximal = false;
  bool minimal = false;
  bool isolated = false;
  int level = 0;  // nu(X)
};

MaximalityStatus maximality_status(const FormalMatrix& X);

struct DescendResult {
  std::map<int, std::vector<FormalMatrix>> by_level;
  bool complete = true;
  int classes_total = 0;
};

/// Level descent from maximal class representatives: generate all UOM merges
/// level by level, deduplicate by canonical form, until exhaustion or budget
/// (seconds; <= 0 means no limit).
DescendResult descend_classes(const std::vector<FormalMatrix>& maximal_reps,
                              double budget_seconds = 0.0);

struct ThetaReference {
  int theta = 0;
  std::set<int> theta_prime;  // the superset Theta'_n
};

ThetaReference theta_reference(int n);

/// Full matrix in O(2^k, k): all prime patterns over one fresh variable per
/// column, or over a supplied first row.
FormalMatrix full_standard(int k);
FormalMatrix full_from_first_row(const Row& first);

}  // namespace uom
