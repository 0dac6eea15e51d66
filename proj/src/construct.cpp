#include "uom/construct.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <unordered_set>

#include "uom/canonical.hpp"
#include "uom/engine.hpp"

namespace uom {

FormalMatrix compose(const FormalMatrix& A, const std::vector<FormalMatrix>& blocks) {
  if (!is_orthogonal_matrix(A)) fail(ErrorCode::NotOrthogonal, "head matrix must be orthogonal");
  if (static_cast<int>(blocks.size()) != A.rows())
    fail(ErrorCode::WidthMismatch, "need one block per row of the head matrix");
  int w = blocks[0].cols();
  for (const auto& B : blocks) {
    if (B.cols() != w) fail(ErrorCode::WidthMismatch, "blocks of unequal width");
    if (!is_orthogonal_matrix(B)) fail(ErrorCode::NotOrthogonal, "blocks must be orthogonal");
  }
  int s = A.cols();
  std::vector<Row> rows;
  for (int k = 0; k < A.rows(); ++k) {
    Row head = A.row(k);
    for (int i = 0; i < blocks[k].rows(); ++i) {
      Row r = head;
      for (int j = 0; j < w; ++j) {
        VarRef e = blocks[k].at(i, j);
        e.column = s + j;
        r.push_back(e);
      }
      rows.push_back(std::move(r));
    }
  }
  return FormalMatrix::from_rows(rows);
}

FormalMatrix genshift(int n) {
  if (n < 1 || n % 2 == 0) fail(ErrorCode::EvenN, "genshift needs odd n >= 1");
  int p = (n - 1) / 2;
  // first row of the cyclic pattern: ids 0, 1..p primed, p..1 unprimed
  std::vector<std::pair<int, bool>> first;
  first.emplace_back(0, false);
  for (int k = 1; k <= p; ++k) first.emplace_back(k, true);
  for (int k = p; k >= 1; --k) first.emplace_back(k, false);
  std::vector<Row> rows;
  for (int i = 0; i < n; ++i) {
    Row r(n);
    for (int j = 0; j < n; ++j) {
      auto [id, primed] = first[((j - i) % n + n) % n];
      r[j] = VarRef{j, id, primed};
    }
    rows.push_back(std::move(r));
  }
  Row last(n);
  for (int j = 0; j < n; ++j) last[j] = VarRef{j, 0, true};
  rows.push_back(std::move(last));
  return FormalMatrix::from_rows(rows);
}

namespace {

bool is_permutation(const std::vector<int>& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

void validate_family(const std::vector<std::vector<int>>& perms) {
  if (perms.empty()) fail(ErrorCode::BadFamily, "empty family");
  size_t deg = perms[0].size();
  for (const auto& p : perms)
    if (p.size() != deg || !is_permutation(p)) fail(ErrorCode::BadFamily, "not a permutation");
  for (size_t a = 0; a < perms.size(); ++a)
    for (size_t b = 0; b < perms.size(); ++b) {
      if (a == b) continue;
      std::vector<int> inv(deg);
      for (size_t i = 0; i < deg; ++i) inv[perms[a][i]] = static_cast<int>(i);
      for (size_t i = 0; i < deg; ++i)
        if (inv[perms[b][i]] == static_cast<int>(i))
          fail(ErrorCode::BadFamily, "quotient permutation has a fixed point");
    }
}

}  // namespace

PermFamily PermFamily::explicit_list(std::vector<std::vector<int>> perms) {
  validate_family(perms);
  PermFamily f;
  f.perms_ = std::move(perms);
  return f;
}

PermFamily PermFamily::cyclic(const std::vector<int>& sigma) {
  size_t n = sigma.size();
  std::vector<std::vector<int>> perms;
  std::vector<int> cur(n);
  for (size_t i = 0; i < n; ++i) cur[i] = static_cast<int>(i);
  for (size_t j = 0; j < n; ++j) {
    perms.push_back(cur);
    std::vector<int> next(n);
    for (size_t i = 0; i < n; ++i) next[i] = sigma[cur[i]];
    cur = std::move(next);
  }
  return explicit_list(std::move(perms));
}

PermFamily PermFamily::klein() {
  return explicit_list({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

PermFamily PermFamily::coset(const std::vector<int>& sigma, const PermFamily& base) {
  std::vector<std::vector<int>> perms;
  for (const auto& p : base.perms()) {
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[i] = sigma[p[i]];
    perms.push_back(std::move(q));
  }
  return explicit_list(std::move(perms));
}

PermFamily rotation_family(int m) {
  std::vector<int> sigma(m);
  for (int i = 0; i < m; ++i) sigma[i] = (i - 1 + m) % m;
  return PermFamily::cyclic(sigma);
}

FormalMatrix double_matrix(const FormalMatrix& X1, const FormalMatrix& X2,
                           const PermFamily& family) {
  const int m = X1.rows(), n = X1.cols();
  if (X2.rows() != m || X2.cols() != n)
    fail(ErrorCode::WidthMismatch, "doubling needs equal-size inputs");
  if (family.size() != m) fail(ErrorCode::BadFamily, "family size must match the row count");
  for (int j = 0; j < n; ++j) {
    std::set<int> a, b;
    for (int i = 0; i < m; ++i) {
      a.insert(X1.at(i, j).id);
      b.insert(X2.at(i, j).id);
    }
    for (int id : a)
      if (b.count(id))
        fail(ErrorCode::VariableCollision, "inputs share a variable in column " + std::to_string(j));
  }
  std::vector<Row> rows;
  for (int i = 0; i < m; ++i) {
    Row r = X1.row(i);
    for (int j = 0; j < m; ++j) r.push_back(VarRef{n + j, i, false});
    rows.push_back(std::move(r));
  }
  const auto& perms = family.perms();
  for (int i = 0; i < m; ++i) {
    Row r = X2.row(i);
    for (int j = 0; j < m; ++j) r.push_back(VarRef{n + j, perms[j][i], true});
    rows.push_back(std::move(r));
  }
  return FormalMatrix::from_rows(rows);
}

FormalMatrix full_from_first_row(const Row& first) {
  int k = static_cast<int>(first.size());
  std::vector<Row> rows;
  for (int mask = 0; mask < (1 << k); ++mask) {
    Row r = first;
    for (int j = 0; j < k; ++j)
      if (mask >> j & 1) r[j].primed = !r[j].primed;
    rows.push_back(std::move(r));
  }
  return FormalMatrix::from_rows(rows);
}

FormalMatrix full_standard(int k) {
  Row first(k);
  for (int j = 0; j < k; ++j) first[j] = VarRef{j, 0, false};
  return full_from_first_row(first);
}

FormalMatrix lift_extension(const FormalMatrix& X, int split, const FormalMatrix& Y1,
                            const std::vector<Row>& z_first_rows) {
  const int m = X.rows(), n = X.cols();
  if (split < 1 || split > n) fail(ErrorCode::SplitMismatch, "split column out of range");
  if (Y1.cols() != split) fail(ErrorCode::SplitMismatch, "Y1 width must equal the split");
  if (Y1.rows() < m) fail(ErrorCode::NotAnExtension, "Y1 has fewer rows than X");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < split; ++j)
      if (!(Y1.at(i, j) == X.at(i, j)))
        fail(ErrorCode::NotAnExtension, "Y1 does not start with the left block of X");
  if (!is_orthogonal_matrix(Y1)) fail(ErrorCode::NotOrthogonal, "Y1 must be orthogonal");
  if (split == n) return Y1;

  const int w = n - split;
  const int p = Y1.rows() - m;
  // fresh ids beyond anything in the right block
  std::vector<int> next_id(w, 0);
  for (int j = 0; j < w; ++j) {
    for (int i = 0; i < m; ++i) next_id[j] = std::max(next_id[j], X.at(i, split + j).id + 1);
  }
  std::vector<FormalMatrix> zs;
  for (int i = 0; i < m + p; ++i) {
    Row first(w);
    if (i < m) {
      for (int j = 0; j < w; ++j) {
        first[j] = X.at(i, split + j);
        first[j].column = j;
      }
    } else if (static_cast<size_t>(i - m) < z_first_rows.size()) {
      first = z_first_rows[i - m];
      if (static_cast<int>(first.size()) != w)
        fail(ErrorCode::SplitMismatch, "supplied Z first row has wrong width");
      for (int j = 0; j < w; ++j) first[j].column = j;
    } else {
      for (int j = 0; j < w; ++j) first[j] = VarRef{j, next_id[j] + (i - m), false};
    }
    zs.push_back(full_from_first_row(first));
  }
  std::vector<Row> rows;
  for (int i = 0; i < m + p; ++i) {
    Row head = Y1.row(i);
    for (int t = 0; t < zs[i].rows(); ++t) {
      Row r = head;
      for (int j = 0; j < w; ++j) {
        VarRef e = zs[i].at(t, j);
        e.column = split + j;
        r.push_back(e);
      }
      rows.push_back(std::move(r));
    }
  }
  return FormalMatrix::from_rows(rows);
}

FormalMatrix merge_variables(const FormalMatrix& X, const OrderMove& move) {
  if (move.column < 0 || move.column >= X.cols())
    fail(ErrorCode::NotPresent, "column out of range");
  if (move.keep_id == move.merge_id)
    fail(ErrorCode::DependentPair, "cannot merge a variable with itself or its perpendicular");
  bool seen_keep = false, seen_merge = false;
  for (int i = 0; i < X.rows(); ++i) {
    int id = X.at(i, move.column).id;
    seen_keep = seen_keep || id == move.keep_id;
    seen_merge = seen_merge || id == move.merge_id;
  }
  if (!seen_keep || !seen_merge)
    fail(ErrorCode::NotPresent, "both variables must occur in the column");
  std::vector<Row> rows = X.row_list();
  for (auto& r : rows) {
    VarRef& e = r[move.column];
    if (e.id == move.merge_id) {
      e.id = move.keep_id;
      e.primed = e.primed != move.flip;
    }
  }
  return FormalMatrix::from_rows(rows);
}

std::vector<FormalMatrix> order_neighbors(const FormalMatrix& X, OrderDirection dir) {
  std::vector<FormalMatrix> out;
  std::set<std::string> seen;
  auto push = [&](const FormalMatrix& Y) {
    std::string key = canonical_form(Y).encoded;
    if (seen.insert(key).second) out.push_back(Y.normalized());
  };
  if (dir == OrderDirection::Down) {
    for (int j = 0; j < X.cols(); ++j) {
      auto ids = X.column_ids(j);
      for (int a : ids)
        for (int b : ids) {
          if (a == b) continue;
          for (bool flip : {false, true})
            push(merge_variables(X, OrderMove{j, a, b, flip}));
        }
    }
  } else {
    for (int j = 0; j < X.cols(); ++j) {
      auto ids = X.column_ids(j);
      int fresh = ids.back() + 1;
      for (int v : ids) {
        std::vector<int> occ;
        for (int i = 0; i < X.rows(); ++i)
          if (X.at(i, j).id == v) occ.push_back(i);
        int t = static_cast<int>(occ.size());
        if (t < 2) continue;
        // reassign a nonempty proper subset to a fresh class; fixing occ[0]
        // in the old class kills the swap symmetry
        for (int mask = 1; mask < (1 << (t - 1)); ++mask) {
          std::vector<Row> rows = X.row_list();
          for (int b = 0; b < t - 1; ++b)
            if (mask >> b & 1) rows[occ[b + 1]][j].id = fresh;
          FormalMatrix Z = FormalMatrix::from_rows(rows);
          if (is_orthogonal_matrix(Z)) push(Z);
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const FormalMatrix& a, const FormalMatrix& b) {
    return serialize_matrix(a) < serialize_matrix(b);
  });
  return out;
}

MaximalityStatus maximality_status(const FormalMatrix& X) {
  if (!is_uom(X)) fail(ErrorCode::NotUOM, "maximality is defined for UOMs");
  MaximalityStatus st;
  st.level = stats(X).nu_total;
  st.maximal = true;
  for (const auto& Z : order_neighbors(X, OrderDirection::Up))
    if (is_uom(Z)) st.maximal = false;
  st.minimal = true;
  for (const auto& Y : order_neighbors(X, OrderDirection::Down))
    if (is_uom(Y)) st.minimal = false;
  st.isolated = st.maximal && st.minimal;
  return st;
}

DescendResult descend_classes(const std::vector<FormalMatrix>& maximal_reps,
                              double budget_seconds) {
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds));
  auto out_of_budget = [&] {
    return budget_seconds > 0 && std::chrono::steady_clock::now() > deadline;
  };

  DescendResult res;
  std::map<int, std::map<std::string, FormalMatrix>> reps_by_level;
  int top = 0;
  for (const auto& X : maximal_reps) {
    if (!is_uom(X)) fail(ErrorCode::NotUOM, "maximal representatives must be UOMs");
    int l = stats(X).nu_total;
    reps_by_level[l].emplace(canonical_form(X).encoded, X.normalized());
    top = std::max(top, l);
  }
  std::map<std::string, FormalMatrix> frontier;
  for (int level = top; level >= 1; --level) {
    if (reps_by_level.count(level))
      for (auto& [k, X] : reps_by_level[level]) frontier.emplace(k, X);
    if (frontier.empty()) continue;
    for (auto& [k, X] : frontier) {
      res.by_level[level].push_back(X);
      ++res.classes_total;
    }
    std::map<std::string, FormalMatrix> next;
    for (auto& [k, X] : frontier) {
      if (out_of_budget()) {
        res.complete = false;
        return res;
      }
      for (const auto& Y : order_neighbors(X, OrderDirection::Down)) {
        if (!is_uom(Y)) continue;
        next.emplace(canonical_form(Y).encoded, Y.normalized());
      }
    }
    frontier = std::move(next);
  }
  return res;
}

ThetaReference theta_reference(int n) {
  if (n < 1) fail(ErrorCode::EmptyInput, "n must be positive");
  ThetaReference t;
  if (n == 4)
    t.theta = 6;
  else if (n == 8)
    t.theta = 11;
  else if (n % 2 == 1)
    t.theta = n + 1;
  else if (n % 4 == 2)
    t.theta = n + 2;
  else
    t.theta = n + 4;
  long long top = 1LL << n;
  auto add_range = [&](long long lo, long long hi) {
    for (long long v = lo; v <= hi; ++v) t.theta_prime.insert(static_cast<int>(v));
  };
  if (n % 2 == 1) {
    t.theta_prime.insert(n + 1);
    add_range(n + 3, top);
  } else {
    add_range(t.theta, top);
  }
  for (long long gap : {top - 1, top - 2, top - 3, top - 5}) t.theta_prime.erase(static_cast<int>(gap));
  return t;
}

}  // namespace uom
