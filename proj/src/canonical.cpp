#include "uom/canonical.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace uom {

namespace {

struct Cls {
  uint64_t side[2] = {0, 0};  // row masks: [0] unprimed, [1] primed
  int column = 0;
};

struct Structure {
  int m = 0, n = 0;
  std::vector<Cls> classes;
  std::vector<std::vector<std::pair<int, int>>> row_inc;  // row -> (class, side)
  std::vector<std::vector<int>> col_classes;              // column -> class indices
};

Structure build(const FormalMatrix& X) {
  Structure s;
  s.m = X.rows();
  s.n = X.cols();
  s.row_inc.resize(s.m);
  s.col_classes.resize(s.n);
  for (int j = 0; j < s.n; ++j) {
    std::map<int, int> idx;
    for (int i = 0; i < s.m; ++i) {
      const VarRef& e = X.at(i, j);
      auto it = idx.find(e.id);
      if (it == idx.end()) {
        it = idx.emplace(e.id, static_cast<int>(s.classes.size())).first;
        s.classes.push_back(Cls{{0, 0}, j});
        s.col_classes[j].push_back(it->second);
      }
      s.classes[it->second].side[e.primed ? 1 : 0] |= uint64_t{1} << i;
      s.row_inc[i].emplace_back(it->second, e.primed ? 1 : 0);
    }
  }
  return s;
}

// Rank-normalize a list of signatures: returns ids such that equal signatures
// share an id and ids follow the sorted order of signature content.
template <typename Sig>
std::vector<int> rank(const std::vector<Sig>& sigs) {
  std::vector<const Sig*> ptrs(sigs.size());
  for (size_t i = 0; i < sigs.size(); ++i) ptrs[i] = &sigs[i];
  std::sort(ptrs.begin(), ptrs.end(), [](const Sig* a, const Sig* b) { return *a < *b; });
  std::vector<int> out(sigs.size());
  std::map<Sig, int> ids;
  for (const Sig* p : ptrs)
    if (!ids.count(*p)) {
      int v = static_cast<int>(ids.size());
      ids.emplace(*p, v);
    }
  for (size_t i = 0; i < sigs.size(); ++i) out[i] = ids.at(sigs[i]);
  return out;
}

std::vector<int> sorted_colors_of_mask(uint64_t mask, const std::vector<int>& colors) {
  std::vector<int> v;
  while (mask) {
    int i = __builtin_ctzll(mask);
    mask &= mask - 1;
    v.push_back(colors[i]);
  }
  std::sort(v.begin(), v.end());
  return v;
}

// One-step-stable color refinement over rows, classes and columns.
std::vector<int> refine(const Structure& s, std::vector<int> colors) {
  const int C = static_cast<int>(s.classes.size());
  for (int round = 0; round < s.m + 2; ++round) {
    std::vector<std::vector<int>> side_sig(2 * C);
    for (int c = 0; c < C; ++c)
      for (int t = 0; t < 2; ++t)
        side_sig[2 * c + t] = sorted_colors_of_mask(s.classes[c].side[t], colors);
    std::vector<int> side_id = rank(side_sig);

    std::vector<std::pair<int, int>> cls_sig(C);
    for (int c = 0; c < C; ++c) {
      int a = side_id[2 * c], b = side_id[2 * c + 1];
      cls_sig[c] = {std::min(a, b), std::max(a, b)};
    }
    std::vector<int> cls_id = rank(cls_sig);

    std::vector<std::vector<int>> col_sig(s.n);
    for (int j = 0; j < s.n; ++j) {
      for (int c : s.col_classes[j]) col_sig[j].push_back(cls_id[c]);
      std::sort(col_sig[j].begin(), col_sig[j].end());
    }
    std::vector<int> col_id = rank(col_sig);

    std::vector<std::pair<int, std::vector<std::array<int, 4>>>> row_sig(s.m);
    for (int i = 0; i < s.m; ++i) {
      row_sig[i].first = colors[i];
      for (auto [c, t] : s.row_inc[i])
        row_sig[i].second.push_back(
            {col_id[s.classes[c].column], cls_id[c], side_id[2 * c + t], side_id[2 * c + (1 - t)]});
      std::sort(row_sig[i].second.begin(), row_sig[i].second.end());
    }
    std::vector<int> next = rank(row_sig);
    if (next == colors) return colors;
    colors = std::move(next);
  }
  return colors;
}

// Symbol encoding under a discrete labeling. perm maps old row -> label.
// Values are shifted to printable-ish bytes; separators keep levels distinct.
std::string encode_under(const Structure& s, const std::vector<int>& perm,
                         std::vector<int>* col_order) {
  auto side_bytes = [&](uint64_t mask) {
    std::vector<int> v;
    while (mask) {
      int i = __builtin_ctzll(mask);
      mask &= mask - 1;
      v.push_back(perm[i]);
    }
    std::sort(v.begin(), v.end());
    std::string b;
    for (int x : v) b += static_cast<char>(x + 4);
    return b;
  };
  std::vector<std::pair<std::string, int>> cols;
  for (int j = 0; j < s.n; ++j) {
    std::vector<std::string> cls_codes;
    for (int c : s.col_classes[j]) {
      std::string a = side_bytes(s.classes[c].side[0]);
      std::string b = side_bytes(s.classes[c].side[1]);
      if (b < a) std::swap(a, b);
      cls_codes.push_back(a + char(2) + b);
    }
    std::sort(cls_codes.begin(), cls_codes.end());
    std::string code;
    for (auto& cc : cls_codes) code += cc + char(1);
    cols.emplace_back(code, j);
  }
  std::stable_sort(cols.begin(), cols.end());
  std::string out;
  out += static_cast<char>(s.m + 4);
  out += static_cast<char>(s.n + 4);
  if (col_order) col_order->clear();
  for (auto& [code, j] : cols) {
    out += code + char(3);
    if (col_order) col_order->push_back(j);
  }
  return out;
}

struct Search {
  const Structure& s;
  std::string best;
  std::vector<int> best_perm;
  std::vector<int> best_cols;
  std::vector<std::vector<int>> autos;
  std::vector<int> prefix;  // individualized rows along the current path

  explicit Search(const Structure& st) : s(st) {}

  void leaf(const std::vector<int>& colors) {
    std::vector<int> perm(s.m);
    std::vector<int> order(s.m);
    for (int i = 0; i < s.m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    for (int p = 0; p < s.m; ++p) perm[order[p]] = p;
    std::vector<int> cols;
    std::string enc = encode_under(s, perm, &cols);
    if (best.empty() || enc < best) {
      best = enc;
      best_perm = perm;
      best_cols = cols;
    } else if (enc == best && autos.size() < 64) {
      // best_perm and perm send the structure to the same labeled object:
      // inv(best_perm) . perm is an automorphism on original rows
      std::vector<int> inv(s.m);
      for (int i = 0; i < s.m; ++i) inv[best_perm[i]] = i;
      std::vector<int> sigma(s.m);
      bool ident = true;
      for (int i = 0; i < s.m; ++i) {
        sigma[i] = inv[perm[i]];
        if (sigma[i] != i) ident = false;
      }
      if (!ident) autos.push_back(sigma);
    }
  }

  void run(std::vector<int> colors) {
    std::map<int, std::vector<int>> cells;
    for (int i = 0; i < s.m; ++i) cells[colors[i]].push_back(i);
    const std::vector<int>* target = nullptr;
    size_t best_size = 0;
    for (auto& [col, rows] : cells)
      if (rows.size() > 1 && (!target || rows.size() < best_size)) {
        target = &rows;
        best_size = rows.size();
      }
    if (!target) {
      leaf(colors);
      return;
    }
    std::vector<int> tried;
    for (int r : *target) {
      bool redundant = false;
      for (const auto& sigma : autos) {
        bool fixes_prefix = true;
        for (int p : prefix)
          if (sigma[p] != p) {
            fixes_prefix = false;
            break;
          }
        if (!fixes_prefix) continue;
        for (int t : tried)
          if (sigma[t] == r) {
            redundant = true;
            break;
          }
        if (redundant) break;
      }
      if (redundant) continue;
      tried.push_back(r);
      std::vector<int> nc = colors;
      nc[r] = s.m + static_cast<int>(prefix.size()) + 1;
      prefix.push_back(r);
      run(refine(s, std::move(nc)));
      prefix.pop_back();
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const FormalMatrix& X) {
  if (X.rows() > 64) fail(ErrorCode::Unsupported, "canonical form supports up to 64 rows");
  Structure s = build(X);
  Search search(s);
  search.run(refine(s, std::vector<int>(s.m, 0)));
  CanonicalForm cf;
  cf.encoded = std::move(search.best);
  cf.row_perm = std::move(search.best_perm);
  cf.col_order = std::move(search.best_cols);
  return cf;
}

std::optional<EquivalenceWitness> are_equivalent(const FormalMatrix& X, const FormalMatrix& Y) {
  if (X.rows() != Y.rows() || X.cols() != Y.cols()) return std::nullopt;
  CanonicalForm cx = canonical_form(X);
  CanonicalForm cy = canonical_form(Y);
  if (!(cx == cy)) return std::nullopt;

  EquivalenceWitness w;
  std::vector<int> inv_y(Y.rows());
  for (int i = 0; i < Y.rows(); ++i) inv_y[cy.row_perm[i]] = i;
  w.row_perm.resize(X.rows());
  for (int i = 0; i < X.rows(); ++i) w.row_perm[i] = inv_y[cx.row_perm[i]];

  w.col_perm.assign(X.cols(), -1);
  for (int p = 0; p < X.cols(); ++p) w.col_perm[cx.col_order[p]] = cy.col_order[p];

  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j) {
      VarRef a = X.at(i, j);
      VarRef b = Y.at(w.row_perm[i], w.col_perm[j]);
      VarRef base{a.column, a.id, false};
      VarRef image{b.column, b.id, b.primed != a.primed};
      auto it = w.renaming.find(base);
      if (it == w.renaming.end()) {
        w.renaming.emplace(base, image);
        w.renaming.emplace(perp(base), perp(image));
      } else if (!(it->second == image)) {
        throw std::logic_error("canonical forms matched but entrywise mapping is inconsistent");
      }
    }
  return w;
}

}  // namespace uom
