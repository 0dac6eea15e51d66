#include "uom/engine.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace uom {

namespace {

constexpr int kMaxRowsForMasks = 64;

void require_mask_size(const FormalMatrix& X) {
  if (X.rows() > kMaxRowsForMasks)
    fail(ErrorCode::Unsupported, "row-mask search supports up to 64 rows");
}

// Per column: occurring entry -> bitmask of rows holding it.
std::vector<std::map<VarRef, uint64_t>> occurrence_masks(const FormalMatrix& X) {
  std::vector<std::map<VarRef, uint64_t>> hit(X.cols());
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j) hit[j][X.at(i, j)] |= uint64_t{1} << i;
  return hit;
}

// Hitting-set search over `allowed` columns: pick at most one occurring
// variable per column so every row of X holds a picked variable. Branches on
// the uncovered row with the fewest remaining options.
bool cover_search(const FormalMatrix& X, const std::vector<std::map<VarRef, uint64_t>>& hit,
                  const std::vector<int>& allowed, uint64_t covered, uint32_t used_cols,
                  std::map<int, VarRef>* chosen) {
  const uint64_t full = (X.rows() == 64) ? ~uint64_t{0} : (uint64_t{1} << X.rows()) - 1;
  if (covered == full) return true;
  int pick = -1;
  int pick_opts = -1;
  for (int i = 0; i < X.rows(); ++i) {
    if (covered >> i & 1) continue;
    int opts = 0;
    for (int j : allowed)
      if (!(used_cols >> j & 1)) ++opts;
    if (pick < 0 || opts < pick_opts) {
      pick = i;
      pick_opts = opts;
      if (opts == 0) return false;
    }
    break;  // option count is the same for every uncovered row; take the first
  }
  // Options for the picked row: any unused allowed column, choosing that
  // row's own entry there.
  for (int j : allowed) {
    if (used_cols >> j & 1) continue;
    VarRef v = X.at(pick, j);
    uint64_t gain = hit[j].at(v);
    if (chosen) (*chosen)[j] = v;
    if (cover_search(X, hit, allowed, covered | gain, used_cols | (uint32_t{1} << j), chosen))
      return true;
    if (chosen) chosen->erase(j);
  }
  return false;
}

}  // namespace

std::optional<Row> find_extension_row(const FormalMatrix& X) {
  if (!is_orthogonal_matrix(X)) fail(ErrorCode::NotOrthogonal, "extension search needs O(m,n)");
  require_mask_size(X);
  auto hit = occurrence_masks(X);
  std::vector<int> all_cols(X.cols());
  for (int j = 0; j < X.cols(); ++j) all_cols[j] = j;
  std::map<int, VarRef> chosen;
  if (!cover_search(X, hit, all_cols, 0, 0, &chosen)) return std::nullopt;
  Row r;
  for (int j = 0; j < X.cols(); ++j) {
    auto it = chosen.find(j);
    VarRef v = (it != chosen.end()) ? it->second : hit[j].begin()->first;
    r.push_back(perp(v));
  }
  return r;
}

bool is_uom(const FormalMatrix& X) {
  return is_orthogonal_matrix(X) && !find_extension_row(X).has_value();
}

namespace {

// DFS over columns choosing candidate entries (perps of occurring variables)
// with exact per-row reachability pruning.
void enumerate_rows_rec(const FormalMatrix& Y,
                        const std::vector<std::vector<std::pair<VarRef, uint64_t>>>& cands,
                        const std::vector<uint64_t>& suffix_union, int j, uint64_t covered,
                        Row* cur, std::vector<Row>* out) {
  const uint64_t full = (uint64_t{1} << Y.rows()) - 1;
  if ((covered | suffix_union[j]) != full) return;
  if (j == Y.cols()) {
    out->push_back(*cur);
    return;
  }
  for (const auto& [v, gain] : cands[j]) {
    cur->push_back(v);
    enumerate_rows_rec(Y, cands, suffix_union, j + 1, covered | gain, cur, out);
    cur->pop_back();
  }
}

}  // namespace

OrthogonalRowSet enumerate_orthogonal_rows(const FormalMatrix& Y) {
  if (!is_orthogonal_matrix(Y)) fail(ErrorCode::NotOrthogonal, "enumeration needs O(m,n)");
  require_mask_size(Y);
  // candidate entries: perps of occurring variables; gain = rows made orthogonal
  std::vector<std::vector<std::pair<VarRef, uint64_t>>> cands(Y.cols());
  for (int j = 0; j < Y.cols(); ++j) {
    std::map<VarRef, uint64_t> m;
    for (int i = 0; i < Y.rows(); ++i) m[perp(Y.at(i, j))] |= uint64_t{1} << i;
    cands[j].assign(m.begin(), m.end());
  }
  std::vector<uint64_t> suffix_union(Y.cols() + 1, 0);
  for (int j = Y.cols() - 1; j >= 0; --j) {
    suffix_union[j] = suffix_union[j + 1];
    for (const auto& [v, gain] : cands[j]) suffix_union[j] |= gain;
  }
  OrthogonalRowSet res;
  Row cur;
  enumerate_rows_rec(Y, cands, suffix_union, 0, 0, &cur, &res.rows);
  std::sort(res.rows.begin(), res.rows.end());

  auto hit = occurrence_masks(Y);
  for (int skip = 0; skip < Y.cols(); ++skip) {
    std::vector<int> allowed;
    for (int j = 0; j < Y.cols(); ++j)
      if (j != skip) allowed.push_back(j);
    if (cover_search(Y, hit, allowed, 0, 0, nullptr)) res.wildcard_columns.push_back(skip);
  }
  return res;
}

int max_mutually_orthogonal(const std::vector<Row>& rows) {
  const int N = static_cast<int>(rows.size());
  if (N == 0) return 0;
  if (N > 64) fail(ErrorCode::Unsupported, "clique search supports up to 64 rows");
  std::vector<uint64_t> adj(N, 0);
  for (int i = 0; i < N; ++i)
    for (int k = i + 1; k < N; ++k)
      if (rows_orthogonal(rows[i], rows[k])) {
        adj[i] |= uint64_t{1} << k;
        adj[k] |= uint64_t{1} << i;
      }
  int best = 0;
  // branch and bound over candidate sets in ascending vertex order
  auto bb = [&](auto&& self, uint64_t cand, int size) -> void {
    if (size + __builtin_popcountll(cand) <= best) return;
    if (!cand) {
      best = std::max(best, size);
      return;
    }
    while (cand) {
      if (size + __builtin_popcountll(cand) <= best) return;
      int v = __builtin_ctzll(cand);
      cand &= cand - 1;
      self(self, cand & adj[v], size + 1);
    }
    best = std::max(best, size);
  };
  bb(bb, ~uint64_t{0} >> (64 - N), 0);
  return best;
}

DiagnosticsReport uom_diagnostics(const FormalMatrix& X, int k_max) {
  if (!is_orthogonal_matrix(X)) fail(ErrorCode::NotOrthogonal, "diagnostics need O(m,n)");
  const int m = X.rows(), n = X.cols();
  MatrixStats st = stats(X);
  DiagnosticsReport r;
  r.mu_max = st.mu_max;

  r.perp_occurs = true;
  for (const auto& [v, c] : st.mu)
    if (mu_of(st, perp(v)) == 0) r.perp_occurs = false;

  r.row_bound_s1 = st.mu_max <= m - n;

  // (ii) s=2: variables y1,y2 in distinct columns leave >= n-1 rows free
  r.row_bound_s2 = true;
  for (int j1 = 0; j1 < n && r.row_bound_s2; ++j1)
    for (int j2 = j1 + 1; j2 < n && r.row_bound_s2; ++j2) {
      std::set<VarRef> v1s, v2s;
      for (int i = 0; i < m; ++i) {
        v1s.insert(X.at(i, j1));
        v2s.insert(X.at(i, j2));
      }
      for (VarRef a : v1s)
        for (VarRef b : v2s) {
          int free_rows = 0;
          for (int i = 0; i < m; ++i)
            if (!(X.at(i, j1) == a) && !(X.at(i, j2) == b)) ++free_rows;
          if (free_rows < n - 1) {
            r.row_bound_s2 = false;
            break;
          }
        }
    }

  r.row_perp_sum = true;
  for (int i = 0; i < m; ++i) {
    int total = 0;
    for (int j = 0; j < n; ++j) total += mu_of(st, perp(X.at(i, j)));
    if (total < m - 1) r.row_perp_sum = false;
  }

  r.pivot_row_exists = false;
  for (int i = 1; i < m; ++i) {
    if (!(X.at(i, 0) == perp(X.at(0, 0)))) continue;
    bool clean = true;
    for (int s = 1; s < n; ++s)
      if (X.at(i, s) == perp(X.at(0, s))) clean = false;
    if (clean) {
      r.pivot_row_exists = true;
      break;
    }
  }

  // (v) max mutually orthogonal row set within each small column subset
  r.submatrix_bound = true;
  std::vector<int> subset;
  auto rows = X.row_list();
  auto check_subset = [&](const std::vector<int>& S) {
    std::vector<Row> restricted(m);
    for (int i = 0; i < m; ++i) {
      Row rr;
      for (size_t t = 0; t < S.size(); ++t) {
        VarRef e = X.at(i, S[t]);
        e.column = static_cast<int>(t);
        rr.push_back(e);
      }
      restricted[i] = std::move(rr);
    }
    int d = max_mutually_orthogonal(restricted);
    int k = static_cast<int>(S.size());
    if (d > m - n + k) return false;
    if (2 * k >= n && d >= m - n + k) return false;
    return true;
  };
  auto rec = [&](auto&& self, int start) -> void {
    if (!r.submatrix_bound) return;
    if (!subset.empty() && static_cast<int>(subset.size()) < n)
      if (!check_subset(subset)) r.submatrix_bound = false;
    if (static_cast<int>(subset.size()) == std::min(k_max, n - 1)) return;
    for (int j = start; j < n; ++j) {
      subset.push_back(j);
      self(self, j + 1);
      subset.pop_back();
    }
  };
  rec(rec, 0);

  // (vi) pair products
  r.pair_product_total = 0;
  for (int j = 0; j < n; ++j) {
    for (int id : X.column_ids(j)) {
      VarRef v{j, id, false};
      r.pair_product_total +=
          static_cast<long long>(mu_of(st, v)) * mu_of(st, perp(v));
    }
  }
  r.pair_product_sum = r.pair_product_total >= static_cast<long long>(m) * (m - 1) / 2;

  r.corollary6_applies = (n % 2 == 1) && (m == n + 1);
  if (r.corollary6_applies) {
    bool shortcut = st.mu_max == 1;
    bool general = !find_extension_row(X).has_value();
    r.corollary6_agrees = (shortcut == general);
  }
  return r;
}

DecompositionProbe decomposition_probe(const FormalMatrix& X, int budget) {
  DecompositionProbe out;
  MatrixStats st = stats(X);
  for (int j = 0; j < X.cols(); ++j)
    if (st.nu_per_column[j] == 1) out.reducible = true;

  const int n = X.cols();
  std::vector<int> subset;
  auto try_subset = [&](const std::vector<int>& S) -> bool {
    // group rows by their restriction to S; distinct restrictions must be
    // pairwise orthogonal within S alone
    std::map<std::vector<VarRef>, std::vector<int>> groups;
    for (int i = 0; i < X.rows(); ++i) {
      std::vector<VarRef> key;
      for (int j : S) key.push_back(X.at(i, j));
      groups[key].push_back(i);
    }
    std::vector<std::vector<VarRef>> keys;
    for (auto& [k, v] : groups) keys.push_back(k);
    for (size_t a = 0; a < keys.size(); ++a)
      for (size_t b = a + 1; b < keys.size(); ++b) {
        bool orth = false;
        for (size_t t = 0; t < S.size() && !orth; ++t) orth = keys[b][t] == perp(keys[a][t]);
        if (!orth) return false;
      }
    // build the witness
    Decomposition d;
    d.columns = S;
    std::vector<Row> head_rows;
    std::vector<int> comp;
    for (int j = 0; j < n; ++j)
      if (std::find(S.begin(), S.end(), j) == S.end()) comp.push_back(j);
    for (auto& key : keys) {
      Row hr;
      for (size_t t = 0; t < S.size(); ++t) {
        VarRef e = key[t];
        e.column = static_cast<int>(t);
        hr.push_back(e);
      }
      head_rows.push_back(hr);
      std::vector<Row> block_rows;
      for (int i : groups[key]) {
        Row br;
        for (size_t t = 0; t < comp.size(); ++t) {
          VarRef e = X.at(i, comp[t]);
          e.column = static_cast<int>(t);
          br.push_back(e);
        }
        block_rows.push_back(br);
      }
      d.blocks.push_back(FormalMatrix::from_rows(block_rows));
    }
    d.head = FormalMatrix::from_rows(head_rows);
    out.decomposition = std::move(d);
    return true;
  };
  auto rec = [&](auto&& self, int start) -> bool {
    if (!subset.empty() && static_cast<int>(subset.size()) < n)
      if (try_subset(subset)) return true;
    if (static_cast<int>(subset.size()) >= std::min(budget, n - 1)) return false;
    for (int j = start; j < n; ++j) {
      subset.push_back(j);
      if (self(self, j + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return out;
}

}  // namespace uom
