#include "uom/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "uom/canonical.hpp"
#include "uom/engine.hpp"

namespace uom {

namespace {

// Candidate next rows: per column, every occurring variable, its perpendicular,
// or one fresh variable; the row must be orthogonal to all existing rows.
void candidate_rows(const FormalMatrix& X, int target_m,
                    const std::function<void(const Row&)>& emit) {
  const int m = X.rows(), n = X.cols();
  const uint64_t full = (uint64_t{1} << m) - 1;
  std::vector<std::vector<std::pair<VarRef, uint64_t>>> cands(n);
  for (int j = 0; j < n; ++j) {
    std::map<VarRef, uint64_t> gain;  // rows made orthogonal by this entry
    std::map<int, int> count;
    for (int i = 0; i < m; ++i) {
      count[X.at(i, j).id]++;
      gain[perp(X.at(i, j))] |= uint64_t{1} << i;
    }
    int fresh = X.column_ids(j).back() + 1;
    // mu prune: entries already at multiplicity m-n in the column cannot recur
    for (int id : X.column_ids(j))
      for (bool primed : {false, true}) {
        VarRef v{j, id, primed};
        int mu = 0;
        for (int i = 0; i < m; ++i)
          if (X.at(i, j) == v) ++mu;
        if (mu >= target_m - n) continue;
        auto it = gain.find(v);
        cands[j].emplace_back(v, it == gain.end() ? 0 : it->second);
      }
    cands[j].emplace_back(VarRef{j, fresh, false}, 0);
  }
  std::vector<uint64_t> suffix(n + 1, 0);
  for (int j = n - 1; j >= 0; --j) {
    suffix[j] = suffix[j + 1];
    for (auto& [v, g] : cands[j]) suffix[j] |= g;
  }
  Row cur(n);
  auto rec = [&](auto&& self, int j, uint64_t covered) -> void {
    if ((covered | suffix[j]) != full) return;
    if (j == n) {
      emit(cur);
      return;
    }
    for (auto& [v, g] : cands[j]) {
      cur[j] = v;
      self(self, j + 1, covered | g);
    }
  };
  rec(rec, 0, 0);
}

// Necessary conditions for extending to a UOM in O(target_m, n).
bool viable(const FormalMatrix& X, int target_m) {
  MatrixStats st = stats(X);
  if (st.mu_max > target_m - X.cols()) return false;
  int missing = 0;
  for (const auto& [v, c] : st.mu)
    if (!st.mu.count(perp(v))) ++missing;
  return missing <= (target_m - X.rows()) * X.cols();
}

}  // namespace

ClassEnumeration enumerate_uom_classes(int m, int n, double budget_seconds) {
  ClassEnumeration out;
  if (m < 1 || n < 1 || m > 64) fail(ErrorCode::Unsupported, "need 1 <= m <= 64, n >= 1");
  if (n >= 63 || (n < 63 && m > (1LL << n))) {
    return out;  // O(m,n) empty beyond 2^n rows
  }
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget_seconds));
  auto out_of_budget = [&] {
    return budget_seconds > 0 && std::chrono::steady_clock::now() > deadline;
  };

  Row first(n);
  for (int j = 0; j < n; ++j) first[j] = VarRef{j, 0, false};
  std::map<std::string, FormalMatrix> level;
  FormalMatrix seed = FormalMatrix::from_rows({first});
  level.emplace(canonical_form(seed).encoded, seed);

  for (int k = 1; k < m; ++k) {
    std::map<std::string, FormalMatrix> next;
    for (auto& [key, X] : level) {
      if (out_of_budget()) {
        out.complete = false;
        break;
      }
      candidate_rows(X, m, [&](const Row& r) {
        FormalMatrix Y = X.with_row(r);
        if (!viable(Y, m)) return;
        std::string ck = canonical_form(Y).encoded;
        if (!next.count(ck)) next.emplace(std::move(ck), Y.normalized());
      });
    }
    out.intermediate_classes += static_cast<long long>(next.size());
    level = std::move(next);
    if (!out.complete) break;
  }
  for (auto& [key, X] : level) {
    if (out_of_budget()) {
      out.complete = false;
      break;
    }
    if (is_uom(X)) out.representatives.push_back(X);
  }
  std::sort(out.representatives.begin(), out.representatives.end(),
            [](const FormalMatrix& a, const FormalMatrix& b) {
              return serialize_matrix(a) < serialize_matrix(b);
            });
  return out;
}

}  // namespace uom
