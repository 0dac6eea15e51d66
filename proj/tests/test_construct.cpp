#include <doctest.h>

#include <algorithm>

#include "uom/canonical.hpp"
#include "uom/catalog.hpp"
#include "uom/construct.hpp"
#include "uom/engine.hpp"
#include "uom/evaluation.hpp"

using namespace uom;

namespace {

FormalMatrix rename_ids(const FormalMatrix& X, int offset) {
  std::vector<Row> rows;
  for (const Row& r : X.row_list()) {
    Row q = r;
    for (auto& e : q) e.id += offset;
    rows.push_back(q);
  }
  return FormalMatrix::from_rows(rows);
}

// The two 4x3 blocks used for the four doubling variants:
// a b c / a' e' f / d b' f' / d' e c'
FormalMatrix doubling_block(int offset) {
  return rename_ids(parse_matrix("abc\nAEf\ndBF\nDeC"), offset);
}

}  // namespace

TEST_CASE("block composition reproduces the printed 16x5 matrix") {
  FormalMatrix A = catalog_get("eq2.X").matrix();
  FormalMatrix B123 = parse_matrix("gh\ngH\nGh\nGH");
  FormalMatrix B4 = parse_matrix("xy\nxY\nXz\nXZ");
  // shared blocks: same ids in B1..B3; B4 continues the column-1 namespace
  std::vector<Row> b4rows;
  for (const Row& r : B4.row_list()) {
    Row q = r;
    q[0].id += 1;  // x after g
    q[1].id += 1;  // y, z after h
    b4rows.push_back(q);
  }
  FormalMatrix B4s = FormalMatrix::from_rows(b4rows);
  FormalMatrix X = compose(A, {B123, B123, B123, B4s});
  CHECK(X.rows() == 16);
  CHECK(X.cols() == 5);
  CHECK(X.normalized() == catalog_get("eq3").matrix().normalized());
  CHECK(is_uom(X));
}

TEST_CASE("composition with width or count mismatches fails") {
  FormalMatrix A = parse_matrix("a\nA");
  FormalMatrix B1 = parse_matrix("bc\nBC");
  CHECK_THROWS_WITH_AS(compose(A, {B1}), doctest::Contains("WidthMismatch"), Error);
  CHECK_THROWS_WITH_AS(compose(A, {B1, parse_matrix("b\nB")}),
                       doctest::Contains("WidthMismatch"), Error);
  CHECK_THROWS_WITH_AS(compose(parse_matrix("ab\nac"), {B1, B1}),
                       doctest::Contains("NotOrthogonal"), Error);
}

TEST_CASE("proposition-7 style biconditional on random two-block compositions") {
  uint64_t state = 31;
  auto rnd = [&](int k) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % k);
  };
  FormalMatrix head = parse_matrix("a\nA");
  FormalMatrix uoms[] = {catalog_get("eq2.X").matrix(), full_standard(3),
                         parse_matrix("abc\nAdE\nFBe\nfDC")};
  FormalMatrix nonuoms[] = {parse_matrix("abc\nAbC\naBC"), parse_matrix("abc\nABc\nabC")};
  int samples = 0;
  for (int t = 0; t < 100; ++t) {
    bool top_uom = rnd(2) == 0;
    bool bot_uom = rnd(2) == 0;
    FormalMatrix B1 = top_uom ? uoms[rnd(3)] : nonuoms[rnd(2)];
    FormalMatrix B2 = bot_uom ? uoms[rnd(3)] : nonuoms[rnd(2)];
    if (B1.cols() != 3 || B2.cols() != 3) continue;
    FormalMatrix X = compose(head, {B1, rename_ids(B2, 40)});
    CHECK(is_orthogonal_matrix(X));
    CHECK(is_uom(X) == (top_uom && bot_uom));
    ++samples;
  }
  CHECK(samples == 100);
}

TEST_CASE("an 18x5 composition over the six-row matrix is a UOM") {
  FormalMatrix head = parse_matrix("s\nS");
  FormalMatrix Y = catalog_get("eq2.Y").matrix();
  FormalMatrix Z12 = catalog_get("cor8.12x4").matrix();
  FormalMatrix X = compose(head, {Y, rename_ids(Z12, 50)});
  CHECK(X.rows() == 18);
  CHECK(X.cols() == 5);
  CHECK(is_uom(X));
}

TEST_CASE("the corollary-8 instance gives a 12x4 UOM") {
  FormalMatrix X = catalog_get("cor8.12x4").matrix();
  CHECK(X.rows() == 12);
  CHECK(is_uom(X));
}

TEST_CASE("genshift golden values") {
  CHECK(genshift(1).normalized() == parse_matrix("a\nA"));
  FormalMatrix g5 = genshift(5);
  CHECK(g5.rows() == 6);
  CHECK(g5.cols() == 5);
  CHECK(are_equivalent(g5, catalog_get("eq8").matrix()).has_value());
  // the printed 6x5 matrix is genshift(5) literally, up to per-column renaming
  CHECK(g5.normalized() == catalog_get("eq8").matrix().normalized());
  CHECK_THROWS_WITH_AS(genshift(4), doctest::Contains("EvenN"), Error);
}

TEST_CASE("genshift outputs are UOMs with unit multiplicity") {
  for (int n : {1, 3, 5, 7, 9}) {
    FormalMatrix X = genshift(n);
    CHECK(is_orthogonal_matrix(X));
    CHECK(stats(X).mu_max == 1);
    CHECK(is_uom(X));
  }
}

TEST_CASE("genshift(7) lands in the third 8x7 class") {
  CHECK(are_equivalent(genshift(7), catalog_get("J3").matrix()).has_value());
  CHECK_FALSE(are_equivalent(genshift(7), catalog_get("J4").matrix()).has_value());
}

TEST_CASE("perm family validation") {
  CHECK(PermFamily::klein().size() == 4);
  CHECK(PermFamily::explicit_list({{0, 1}, {1, 0}}).size() == 2);
  CHECK_THROWS_WITH_AS(PermFamily::explicit_list({{0, 1}, {0, 1}}),
                       doctest::Contains("BadFamily"), Error);
  CHECK_THROWS_WITH_AS(PermFamily::explicit_list({{0, 0}}), doctest::Contains("BadFamily"), Error);
  // cyclic((1432)) in 0-based one-line form: 1->4,4->3,3->2,2->1 is [3,0,1,2]
  PermFamily c = PermFamily::cyclic({3, 0, 1, 2});
  CHECK(c.size() == 4);
}

TEST_CASE("doubling reproduces the printed perpendicular blocks") {
  FormalMatrix X1 = doubling_block(0);
  FormalMatrix X2 = doubling_block(10);
  REQUIRE(is_uom(X1));

  // cyclic sigma = (1432): column j rotated j steps down, the plain doubling
  FormalMatrix Zrot = double_matrix(X1, X2, rotation_family(4));
  // Y2 block rows: y'_{pi_j(i), j}; spot-check the printed pattern
  // row 1 of Y2: y'_11 y'_42 y'_33 y'_24  (0-based ids 0,3,2,1)
  for (int j = 0; j < 4; ++j) CHECK(Zrot.at(4, 3 + j).primed);
  CHECK(Zrot.at(4, 3).id == 0);
  CHECK(Zrot.at(4, 4).id == 3);
  CHECK(Zrot.at(4, 5).id == 2);
  CHECK(Zrot.at(4, 6).id == 1);
  CHECK(rotation_family(4).perms() == PermFamily::cyclic({3, 0, 1, 2}).perms());

  // klein family: row 3 of the printed block is y'_31 y'_42 y'_13 y'_24
  FormalMatrix Zk = double_matrix(X1, X2, PermFamily::klein());
  CHECK(Zk.at(6, 3).id == 2);
  CHECK(Zk.at(6, 4).id == 3);
  CHECK(Zk.at(6, 5).id == 0);
  CHECK(Zk.at(6, 6).id == 1);
}

TEST_CASE("every row of the fresh block is orthogonal to every row of its perpendicular block") {
  uint64_t state = 7;
  auto rnd = [&](int k) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % k);
  };
  FormalMatrix X1 = doubling_block(0);
  FormalMatrix X2 = doubling_block(10);
  int tested = 0;
  for (int t = 0; t < 100; ++t) {
    // random family: id + random permutation with fixed-point-free quotients,
    // built by shuffling until valid (small m, fast)
    std::vector<std::vector<int>> fam{{0, 1, 2, 3}};
    while (fam.size() < 4) {
      std::vector<int> p{0, 1, 2, 3};
      for (int i = 3; i > 0; --i) std::swap(p[i], p[rnd(i + 1)]);
      bool ok = true;
      for (const auto& q : fam) {
        for (int i = 0; i < 4 && ok; ++i)
          if (q[i] == p[i]) ok = false;
      }
      if (ok) fam.push_back(p);
    }
    PermFamily f = PermFamily::explicit_list(fam);
    FormalMatrix Z = double_matrix(X1, X2, f);
    for (int i = 0; i < 4; ++i) {
      Row top = Z.row(i);
      Row top_y(top.begin() + 3, top.end());
      for (int k = 0; k < 4; ++k) {
        Row bot = Z.row(4 + k);
        Row bot_y(bot.begin() + 3, bot.end());
        CHECK(rows_orthogonal(top_y, bot_y));
      }
    }
    CHECK(is_orthogonal_matrix(Z));
    CHECK(is_uom(Z));  // proposition-14 case: both inputs are UOMs in O(p+1,p)
    ++tested;
  }
  CHECK(tested == 100);
}

TEST_CASE("the four doubling variants land on the expected 8x7 classes") {
  FormalMatrix X1 = doubling_block(0);
  FormalMatrix X2 = doubling_block(10);
  auto K = PermFamily::klein();
  auto K123 = PermFamily::coset({1, 2, 0, 3}, K);           // (123)K
  auto C = PermFamily::cyclic({1, 2, 3, 0});                 // <(1234)>
  auto C12 = PermFamily::coset({1, 0, 2, 3}, C);             // (12)C
  CHECK(are_equivalent(double_matrix(X1, X2, K), catalog_get("J1").matrix()).has_value());
  CHECK(are_equivalent(double_matrix(X1, X2, K123), catalog_get("J2").matrix()).has_value());
  CHECK(are_equivalent(double_matrix(X1, X2, C), catalog_get("J6").matrix()).has_value());
  CHECK(are_equivalent(double_matrix(X1, X2, C12), catalog_get("J5").matrix()).has_value());
}

TEST_CASE("doubling rejects shared variables and wrong family sizes") {
  FormalMatrix X1 = doubling_block(0);
  CHECK_THROWS_WITH_AS(double_matrix(X1, X1, rotation_family(4)),
                       doctest::Contains("VariableCollision"), Error);
  CHECK_THROWS_WITH_AS(double_matrix(X1, doubling_block(10), rotation_family(3)),
                       doctest::Contains("BadFamily"), Error);
}

TEST_CASE("lifting reproduces the worked 8x3 example") {
  FormalMatrix X = parse_matrix("abc\nAde\naBE");
  FormalMatrix Y1 = parse_matrix("ab\nAd\naB\nAD");
  FormalMatrix Y = lift_extension(X, 2, Y1);
  CHECK(Y.rows() == 8);  // 2^{n-s} (m+p) = 2 * 4
  CHECK(Y.cols() == 3);
  CHECK(is_orthogonal_matrix(Y));
  // corrected print: a b c / a b c' / a' d e / a' d e' / a b' e' / a b' e /
  //                  a' d' x / a' d' x'
  FormalMatrix expect = parse_matrix("abc\nabC\nAde\nAdE\naBE\naBe\nADf\nADF");
  CHECK(Y.normalized() == expect.normalized());
  // X is a submatrix (rows 0, 2, 4 here)
  auto rows = Y.row_list();
  for (const Row& r : X.row_list()) CHECK(std::count(rows.begin(), rows.end(), r) >= 1);
}

TEST_CASE("lifting a full left extension yields a full matrix") {
  FormalMatrix X = parse_matrix("abc\nAde\naBE");
  // Y1 must start with X1's rows; complete X1 to the 4-row full matrix
  FormalMatrix X1 = X.sub_columns({0, 1});
  std::vector<Row> rows = X1.row_list();
  rows.push_back({VarRef{0, 0, true}, VarRef{1, 1, true}});  // a' d'
  FormalMatrix Y1 = FormalMatrix::from_rows(rows);
  FormalMatrix Y = lift_extension(X, 2, Y1);
  CHECK(Y.rows() == 8);  // full O(3)
  CHECK(is_uom(Y));      // full matrices are unextendible
}

TEST_CASE("degenerate lift with split = n returns the extension itself") {
  FormalMatrix X = parse_matrix("ab\nAc");
  FormalMatrix Y1 = parse_matrix("ab\nAc\nAC");
  CHECK(lift_extension(X, 2, Y1) == Y1);
}

TEST_CASE("lift validates the split and the extension property") {
  FormalMatrix X = parse_matrix("abc\nAde\naBE");
  CHECK_THROWS_WITH_AS(lift_extension(X, 4, X), doctest::Contains("SplitMismatch"), Error);
  FormalMatrix bad = parse_matrix("xy\nXz\nXY");  // third row differs from X's left block
  CHECK_THROWS_WITH_AS(lift_extension(X, 2, bad), doctest::Contains("NotAnExtension"), Error);
}

TEST_CASE("merging reduces nu by one and preserves orthogonality") {
  FormalMatrix X = catalog_get("eq2.X").matrix();
  for (bool flip : {false, true}) {
    FormalMatrix Y = merge_variables(X, OrderMove{2, 0, 1, flip});
    CHECK(is_orthogonal_matrix(Y));
    CHECK(stats(Y).nu_per_column[2] == stats(X).nu_per_column[2] - 1);
    CHECK_FALSE(is_uom(Y));  // this merge loses unextendibility
  }
  CHECK_THROWS_WITH_AS(merge_variables(X, OrderMove{2, 0, 0, false}),
                       doctest::Contains("DependentPair"), Error);
  CHECK_THROWS_WITH_AS(merge_variables(X, OrderMove{2, 0, 9, false}),
                       doctest::Contains("NotPresent"), Error);
}

TEST_CASE("down neighbors of the single-class column matrix are empty") {
  CHECK(order_neighbors(parse_matrix("a\nA"), OrderDirection::Down).empty());
}

TEST_CASE("the six-row matrix has no orthogonal up neighbor") {
  CHECK(order_neighbors(catalog_get("eq2.Y").matrix(), OrderDirection::Up).empty());
}

TEST_CASE("maximality of the displayed 8x4 pair and isolation of the 6x4 class") {
  MaximalityStatus s12 = maximality_status(catalog_get("eq12").matrix());
  CHECK(s12.maximal);
  CHECK_FALSE(s12.minimal);
  CHECK(s12.level == 13);
  MaximalityStatus s13 = maximality_status(catalog_get("eq13").matrix());
  CHECK(s13.maximal);
  CHECK(s13.level == 10);
  MaximalityStatus sy = maximality_status(catalog_get("eq2.Y").matrix());
  CHECK(sy.isolated);
  CHECK_THROWS_WITH_AS(maximality_status(parse_matrix("ab\nAc\nAC")),
                       doctest::Contains("NotUOM"), Error);
}

TEST_CASE("merges of UOMs that stay UOMs certify the source (lemma-17 direction)") {
  uint64_t state = 3;
  auto rnd = [&](int k) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((state >> 33) % k);
  };
  const char* names[] = {"eq4.1", "eq4.2", "eq12", "eq13", "eq10", "J1", "J2"};
  int hits = 0;
  for (int t = 0; t < 100; ++t) {
    FormalMatrix X = catalog_get(names[rnd(7)]).matrix();
    int j = rnd(X.cols());
    auto ids = X.column_ids(j);
    if (ids.size() < 2) continue;
    int a = ids[rnd(static_cast<int>(ids.size()))];
    int b = ids[rnd(static_cast<int>(ids.size()))];
    if (a == b) continue;
    FormalMatrix Y = merge_variables(X, OrderMove{j, a, b, rnd(2) == 1});
    CHECK(is_orthogonal_matrix(Y));
    if (is_uom(Y)) {
      CHECK(is_uom(X));  // lemma 17: lower UOM forces upper UOM
      ++hits;
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("decomposable maximality: disjoint maximal blocks iff maximal") {
  // eq12 = [a;a'] |= (B1, B2) with disjoint maximal blocks: maximal
  CHECK(maximality_status(catalog_get("eq12").matrix()).maximal);
  // sharing a variable across blocks breaks maximality
  FormalMatrix head = parse_matrix("a\nA");
  FormalMatrix B = catalog_get("eq2.X").matrix();
  FormalMatrix shared = compose(head, {B, B});  // same variables in both blocks
  REQUIRE(is_uom(shared));
  CHECK_FALSE(maximality_status(shared).maximal);
}

TEST_CASE("descent from the isolated 6x4 class returns only itself") {
  DescendResult r = descend_classes({catalog_get("eq2.Y").matrix()});
  CHECK(r.classes_total == 1);
  CHECK(r.complete);
  CHECK(r.by_level.begin()->second.size() == 1);
}

TEST_CASE("descent from the two displayed maximal 8x4 classes stays within bounds") {
  DescendResult r =
      descend_classes({catalog_get("eq12").matrix(), catalog_get("eq13").matrix()}, 60.0);
  CHECK(r.complete);
  CHECK(r.classes_total >= 2);
  CHECK(r.classes_total <= 144);  // the full class count of O(8,4)
  // every representative is a UOM on its stated level
  for (const auto& [level, ms] : r.by_level)
    for (const auto& X : ms) {
      CHECK(is_uom(X));
      CHECK(stats(X).nu_total == level);
    }
}

TEST_CASE("theta reference values") {
  CHECK(theta_reference(1).theta == 2);
  CHECK(theta_reference(2).theta == 4);
  CHECK(theta_reference(3).theta == 4);
  CHECK(theta_reference(4).theta == 6);
  CHECK(theta_reference(5).theta == 6);
  CHECK(theta_reference(6).theta == 8);
  CHECK(theta_reference(7).theta == 8);
  CHECK(theta_reference(8).theta == 11);
  CHECK(theta_reference(12).theta == 16);
  CHECK(theta_reference(1).theta_prime == std::set<int>{2});
  CHECK(theta_reference(3).theta_prime == std::set<int>{4, 8});
  CHECK(theta_reference(4).theta_prime == std::set<int>{6, 7, 8, 9, 10, 12, 16});
  std::set<int> t5 = {6};
  for (int v = 8; v <= 26; ++v) t5.insert(v);
  t5.insert(28);
  t5.insert(32);
  CHECK(theta_reference(5).theta_prime == t5);
}
