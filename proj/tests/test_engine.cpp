#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <set>

#include "uom/catalog.hpp"
#include "uom/construct.hpp"
#include "uom/engine.hpp"

using namespace uom;

namespace {

// Independent oracle: brute-force search over every row whose entries are
// perpendiculars of occurring variables.
bool extendible_bruteforce(const FormalMatrix& X) {
  std::vector<std::vector<VarRef>> cands(X.cols());
  for (int j = 0; j < X.cols(); ++j) {
    std::set<VarRef> s;
    for (int i = 0; i < X.rows(); ++i) s.insert(perp(X.at(i, j)));
    cands[j].assign(s.begin(), s.end());
  }
  Row cur(X.cols());
  auto rec = [&](auto&& self, int j) -> bool {
    if (j == X.cols()) {
      for (int i = 0; i < X.rows(); ++i)
        if (!rows_orthogonal(cur, X.row(i))) return false;
      return true;
    }
    for (const VarRef& v : cands[j]) {
      cur[j] = v;
      if (self(self, j + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("extension search on a small extendible matrix agrees with brute force") {
  FormalMatrix X = parse_matrix("ab\nAc\nAC");
  CHECK(extendible_bruteforce(X));
  auto row = find_extension_row(X);
  REQUIRE(row.has_value());
  CHECK(is_orthogonal_matrix(X.with_row(*row)));  // any witness extends to O(m+1,n)
  CHECK_FALSE(is_uom(X));
}

TEST_CASE("the displayed 4x3 and full standard matrices are unextendible") {
  CHECK_FALSE(find_extension_row(catalog_get("eq2.X").matrix()).has_value());
  CHECK_FALSE(find_extension_row(full_standard(3)).has_value());
  CHECK_FALSE(extendible_bruteforce(catalog_get("eq2.X").matrix()));
}

TEST_CASE("extension search refuses non-orthogonal input") {
  CHECK_THROWS_WITH_AS(find_extension_row(parse_matrix("ab\nac")),
                       doctest::Contains("NotOrthogonal"), Error);
}

TEST_CASE("is_uom on the displayed pairs") {
  CHECK(is_uom(catalog_get("eq4.1").matrix()));
  CHECK(is_uom(catalog_get("eq4.2").matrix()));
  // eq2.X with f merged into e stays orthogonal but loses unextendibility
  FormalMatrix merged = merge_variables(catalog_get("eq2.X").matrix(), OrderMove{2, 0, 1, false});
  CHECK(is_orthogonal_matrix(merged));
  CHECK_FALSE(is_uom(merged));
}

TEST_CASE("extension agrees with brute force on random small orthogonal matrices") {
  uint64_t state = 99;
  auto rnd = [&](int k) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % k);
  };
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 2 + rnd(2);
    std::vector<Row> rows;
    Row first;
    for (int j = 0; j < n; ++j) first.push_back(VarRef{j, 0, false});
    rows.push_back(first);
    for (int grow = 0; grow < 4; ++grow) {
      Row r;
      for (int j = 0; j < n; ++j) r.push_back(VarRef{j, rnd(3), rnd(2) == 1});
      bool ok = true;
      for (const Row& prev : rows) ok = ok && rows_orthogonal(r, prev);
      if (ok) rows.push_back(r);
    }
    FormalMatrix X = FormalMatrix::from_rows(rows);
    CHECK(find_extension_row(X).has_value() == extendible_bruteforce(X));
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("the 5x4 drop of the six-row matrix has exactly the 16 printed orthogonal rows") {
  FormalMatrix Y = catalog_get("eq2.Y").matrix();
  FormalMatrix Q = Y.without_rows({0});
  OrthogonalRowSet rs = enumerate_orthogonal_rows(Q);
  CHECK(rs.rows.size() == 16);
  CHECK(rs.wildcard_columns.empty());
  // the printed list, in the letters of eq2.Y (x,a | y,b,c | z,d | w,e,f)
  const char* printed[] = {"ABzf", "ABde", "ACDf", "ACdE", "AcDe", "AczE", "xyzw", "xyDe",
                           "xCdw", "xCDF", "xbde", "xbzF", "ayDf", "acDF", "aBdw", "abdE"};
  auto decode = [&](const std::string& s) {
    const std::string alphabet[4] = {"xa", "ybc", "zd", "wef"};
    Row r;
    for (int j = 0; j < 4; ++j) {
      char c = static_cast<char>(std::tolower(s[j]));
      int id = static_cast<int>(alphabet[j].find(c));
      r.push_back(VarRef{j, id, std::isupper(static_cast<unsigned char>(s[j])) != 0});
    }
    return r;
  };
  std::vector<Row> expect;
  for (const char* p : printed) expect.push_back(decode(p));
  std::sort(expect.begin(), expect.end());
  CHECK(expect == rs.rows);
  CHECK(max_mutually_orthogonal(rs.rows) == 11);
  for (const Row& r : rs.rows) CHECK(is_orthogonal_matrix(Q.with_row(r)));
}

TEST_CASE("the 7x4 matrix minus its first row has exactly rows u, v, w") {
  FormalMatrix X = catalog_get("eq10").matrix();
  OrthogonalRowSet rs = enumerate_orthogonal_rows(X.without_rows({0}));
  REQUIRE(rs.rows.size() == 3);
  CHECK(rs.wildcard_columns.empty());
  std::vector<Row> expect;
  expect.push_back(X.row(0));                                                     // u = a c e g
  expect.push_back({{0, 0, false}, {1, 0, false}, {2, 1, false}, {3, 1, false}});  // v = a c f h
  expect.push_back({{0, 0, false}, {1, 1, false}, {2, 1, false}, {3, 1, true}});   // w = a d f h'
  std::sort(expect.begin(), expect.end());
  CHECK(rs.rows == expect);
  // v and w are orthogonal, so appending both to the 6-row remainder gives a
  // UOM in O(8,4)
  bool vw_orth = rows_orthogonal(rs.rows[1], rs.rows[2]);
  CHECK(vw_orth);
  FormalMatrix Z = X.without_rows({0}).with_row(rs.rows[1]).with_row(rs.rows[2]);
  CHECK(is_orthogonal_matrix(Z));
  CHECK(is_uom(Z));
}

TEST_CASE("the 10x5 matrix minus its last two rows has exactly 6 orthogonal rows") {
  FormalMatrix X = catalog_get("sec6.10x5").matrix();
  OrthogonalRowSet rs = enumerate_orthogonal_rows(X.without_rows({8, 9}));
  CHECK(rs.rows.size() == 6);
  CHECK(rs.wildcard_columns.empty());
  CHECK(std::count(rs.rows.begin(), rs.rows.end(), X.row(8)) == 1);
  CHECK(std::count(rs.rows.begin(), rs.rows.end(), X.row(9)) == 1);
}

TEST_CASE("wildcard columns appear when a cover can skip a column") {
  FormalMatrix Y = catalog_get("eq2.X").matrix().without_rows({2, 3});
  OrthogonalRowSet rs = enumerate_orthogonal_rows(Y);
  CHECK_FALSE(rs.wildcard_columns.empty());
}

TEST_CASE("extension and enumeration agree on every catalog matrix") {
  for (const auto& e : catalog()) {
    if (e.is_qudit || e.source_suspect) continue;
    FormalMatrix X = e.matrix();
    if (!is_orthogonal_matrix(X)) continue;
    bool ext = find_extension_row(X).has_value();
    OrthogonalRowSet rs = enumerate_orthogonal_rows(X);
    bool any = !rs.rows.empty() || !rs.wildcard_columns.empty();
    CAPTURE(e.name);
    CHECK(ext == any);
  }
}

TEST_CASE("clique sizes") {
  CHECK(max_mutually_orthogonal({Row{VarRef{0, 0, false}}}) == 1);
  CHECK(max_mutually_orthogonal(full_standard(3).row_list()) == 8);
  CHECK(max_mutually_orthogonal(full_standard(4).row_list()) == 16);
}

TEST_CASE("diagnostics on the 4x3 class") {
  FormalMatrix X = catalog_get("eq2.X").matrix();
  DiagnosticsReport d = uom_diagnostics(X);
  CHECK(d.all_pass());
  CHECK(d.mu_max == 1);
  CHECK(d.mu_max == X.rows() - X.cols());
  CHECK(d.corollary6_applies);
  CHECK(d.corollary6_agrees);
}

TEST_CASE("diagnostics check (vi) on the first 8x7 class") {
  FormalMatrix J1 = catalog_get("J1").matrix();
  DiagnosticsReport d = uom_diagnostics(J1);
  CHECK(d.pair_product_total >= 8 * 7 / 2);
  CHECK(d.pair_product_total == 28);  // tight here
  CHECK(d.all_pass());
}

TEST_CASE("diagnostics refute a merged matrix") {
  FormalMatrix merged = merge_variables(catalog_get("eq2.X").matrix(), OrderMove{2, 0, 1, false});
  DiagnosticsReport d = uom_diagnostics(merged);
  CHECK_FALSE(d.all_pass());
  CHECK_FALSE(is_uom(merged));
}

TEST_CASE("diagnostics hold on every clean catalog UOM") {
  for (const auto& e : catalog()) {
    if (e.is_qudit || e.source_suspect || !e.claims.is_uom.value_or(false)) continue;
    CAPTURE(e.name);
    CHECK(uom_diagnostics(e.matrix()).all_pass());
  }
}

TEST_CASE("lemma 5(iii): row perpendicular multiplicities sum to at least m-1") {
  for (const char* name : {"eq2.Y", "J4", "tab4.11x5"}) {
    FormalMatrix X = catalog_get(name).matrix();
    MatrixStats st = stats(X);
    for (int i = 0; i < X.rows(); ++i) {
      int total = 0;
      for (int j = 0; j < X.cols(); ++j) total += mu_of(st, perp(X.at(i, j)));
      CHECK(total >= X.rows() - 1);
    }
  }
}

TEST_CASE("decomposition probe on the displayed 8x4 pair") {
  DecompositionProbe p1 = decomposition_probe(catalog_get("eq4.1").matrix());
  REQUIRE(p1.decomposition.has_value());
  CHECK(p1.decomposition->columns == std::vector<int>{0});
  CHECK(p1.decomposition->head.rows() == 2);  // A = [x; x']
  CHECK(p1.reducible);

  DecompositionProbe p2 = decomposition_probe(catalog_get("eq4.2").matrix(), 3);
  CHECK_FALSE(p2.decomposition.has_value());  // budget 3 is complete for n = 4
  CHECK_FALSE(p2.reducible);
}

TEST_CASE("reducibility flags of the two maximal 8x4 matrices") {
  CHECK(decomposition_probe(catalog_get("eq12").matrix()).reducible);
  CHECK_FALSE(decomposition_probe(catalog_get("eq13").matrix()).reducible);
  // eq13 is still decomposable (all nu_j > 1 but single-variable blocks exist)
  CHECK(decomposition_probe(catalog_get("eq13").matrix()).decomposition.has_value());
}
