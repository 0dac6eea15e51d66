#include <doctest.h>

#include "uom/catalog.hpp"
#include "uom/core.hpp"
#include "uom/evaluation.hpp"

using namespace uom;

TEST_CASE("perp is a fixed-point-free involution") {
  VarRef v{2, 5, false};
  CHECK(perp(perp(v)) == v);
  CHECK(perp(v) != v);
  CHECK(independent(v, VarRef{2, 6, true}));
  CHECK_FALSE(independent(v, perp(v)));
}

TEST_CASE("compact parsing maps case to the involution and scopes letters per column") {
  FormalMatrix X = parse_matrix("aaaaaaa\nAbbbbbb");
  CHECK(X.rows() == 2);
  CHECK(X.cols() == 7);
  CHECK(X.at(1, 0) == VarRef{0, 0, true});
  CHECK(X.at(1, 1) == VarRef{1, 1, false});  // 'b' is a new id in column 1
  // same letter in different columns is a different variable
  FormalMatrix Y = parse_matrix("ab\naB\naC");
  CHECK(Y.at(0, 0).id == Y.at(0, 1).id);  // both first-appearance id 0
  CHECK(Y.at(2, 1) == VarRef{1, 1, true});
}

TEST_CASE("parse errors") {
  CHECK_THROWS_WITH_AS(parse_matrix("ab\nabc"), doctest::Contains("RaggedRows"), Error);
  CHECK_THROWS_WITH_AS(parse_matrix("a1\nb2"), doctest::Contains("BadToken"), Error);
  CHECK_THROWS_WITH_AS(parse_matrix(""), doctest::Contains("EmptyInput"), Error);
  CHECK_THROWS_WITH_AS(parse_matrix("   \n  "), doctest::Contains("EmptyInput"), Error);
}

TEST_CASE("extended token format covers named ids and primes") {
  FormalMatrix X = parse_matrix("y3 y7\ny3' y1");
  CHECK(X.at(0, 0).id == 0);
  CHECK(X.at(1, 0) == VarRef{0, 0, true});
  CHECK(X.at(1, 1) == VarRef{1, 1, false});
  CHECK(rows_orthogonal(X.row(0), X.row(1)));
}

TEST_CASE("rows_orthogonal needs a perpendicular pair in some column") {
  FormalMatrix X = parse_matrix("ab\nAc");
  CHECK(rows_orthogonal(X.row(0), X.row(1)));
  FormalMatrix Y = parse_matrix("ab\nab");
  CHECK_FALSE(rows_orthogonal(Y.row(0), Y.row(1)));
  Row shorter = {VarRef{0, 0, false}};
  CHECK_THROWS_WITH_AS(rows_orthogonal(X.row(0), shorter), doctest::Contains("LengthMismatch"),
                       Error);
}

TEST_CASE("orthogonality of the displayed examples") {
  CHECK(is_orthogonal_matrix(catalog_get("eq2.X").matrix()));
  CHECK(is_orthogonal_matrix(catalog_get("eq3").matrix()));
  CHECK_FALSE(is_orthogonal_matrix(parse_matrix("ab\nac")));
}

TEST_CASE("every distinct row pair of the block-composition example is orthogonal") {
  FormalMatrix X = catalog_get("eq3").matrix();
  for (int i = 0; i < X.rows(); ++i)
    for (int k = i + 1; k < X.rows(); ++k) CHECK(rows_orthogonal(X.row(i), X.row(k)));
}

TEST_CASE("stats: multiplicities, nu, balance") {
  FormalMatrix X = catalog_get("eq2.X").matrix();
  MatrixStats sx = stats(X);
  CHECK(sx.balanced);
  CHECK(sx.mu_max == 1);
  CHECK(sx.nu_total == 6);

  FormalMatrix Y = catalog_get("eq2.Y").matrix();
  MatrixStats sy = stats(Y);
  CHECK_FALSE(sy.balanced);
  // 'a' occurs twice in the first column of Y
  CHECK(mu_of(sy, VarRef{0, 1, false}) == 2);

  FormalMatrix tiny = parse_matrix("a\nA");
  MatrixStats st = stats(tiny);
  CHECK(st.nu_total == 1);
  CHECK(st.mu_max == 1);
  CHECK(st.balanced);
}

TEST_CASE("serialization round-trips on every catalog matrix") {
  for (const auto& e : catalog()) {
    if (e.is_qudit || e.source_suspect) continue;
    FormalMatrix X = e.matrix();
    CHECK(parse_matrix(serialize_matrix(X)) == X.normalized());
    CHECK(matrix_from_json(to_json(X)) == X);
  }
}

TEST_CASE("round-trip holds for random matrices in both text forms") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    int m = 1 + static_cast<int>(rng.next_u64() % 6);
    int n = 1 + static_cast<int>(rng.next_u64() % 5);
    std::vector<Row> rows;
    for (int i = 0; i < m; ++i) {
      Row r;
      for (int j = 0; j < n; ++j)
        r.push_back(VarRef{j, static_cast<int>(rng.next_u64() % 30), (rng.next_u64() & 1) != 0});
      rows.push_back(r);
    }
    FormalMatrix X = FormalMatrix::from_rows(rows);
    CHECK(parse_matrix(serialize_matrix(X)) == X.normalized());
  }
}

TEST_CASE("orthogonality is invariant under relabeling") {
  Rng rng(5);
  FormalMatrix X = catalog_get("eq4.2").matrix();
  for (int t = 0; t < 20; ++t) {
    auto rows = X.row_list();
    std::swap(rows[rng.next_u64() % rows.size()], rows[rng.next_u64() % rows.size()]);
    // involution-respecting flip of one class
    int j = static_cast<int>(rng.next_u64() % X.cols());
    int id = static_cast<int>(rng.next_u64() % 2);
    for (auto& r : rows)
      if (r[j].id == id) r[j].primed = !r[j].primed;
    CHECK(is_orthogonal_matrix(FormalMatrix::from_rows(rows)));
  }
}

TEST_CASE("a full matrix admits no further orthogonal row") {
  FormalMatrix full = catalog_get("eq1.2").matrix();
  CHECK(full.rows() == 4);  // the 2^n bound for n = 2
  for (int id0 = 0; id0 < 3; ++id0)
    for (int p0 = 0; p0 < 2; ++p0)
      for (int id1 = 0; id1 < 3; ++id1)
        for (int p1 = 0; p1 < 2; ++p1) {
          Row r{VarRef{0, id0, p0 == 1}, VarRef{1, id1, p1 == 1}};
          CHECK_FALSE(is_orthogonal_matrix(full.with_row(r)));
        }
}
