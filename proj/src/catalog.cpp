#include "uom/catalog.hpp"

#include <algorithm>

#include "uom/canonical.hpp"
#include "uom/construct.hpp"
#include "uom/engine.hpp"

namespace uom {

FormalMatrix CatalogEntry::matrix() const {
  if (is_qudit) fail(ErrorCode::UnknownEntry, name + " is a qudit set, not a formal matrix");
  std::string text;
  for (const auto& r : rows) text += r + "\n";
  return parse_matrix(text);
}

QuditProductSet CatalogEntry::qudit_set() const {
  if (!is_qudit) fail(ErrorCode::UnknownEntry, name + " is a formal matrix, not a qudit set");
  return pyramid_upb();
}

namespace {

CatalogEntry entry(std::string name, std::vector<std::string> rows, CatalogClaims claims,
                   std::string note = "") {
  CatalogEntry e;
  e.name = std::move(name);
  e.source_rows = rows;
  e.rows = std::move(rows);
  e.claims = claims;
  e.note = std::move(note);
  return e;
}

CatalogEntry repaired_entry(std::string name, std::vector<std::string> source,
                            std::vector<std::string> rows, CatalogClaims claims,
                            std::string note) {
  CatalogEntry e;
  e.name = std::move(name);
  e.source_rows = std::move(source);
  e.rows = std::move(rows);
  e.repaired = true;
  e.claims = claims;
  e.note = std::move(note);
  return e;
}

CatalogEntry suspect_entry(std::string name, std::vector<std::string> source, CatalogClaims claims,
                           std::string note) {
  CatalogEntry e;
  e.name = std::move(name);
  e.source_rows = std::move(source);
  e.rows = e.source_rows;
  e.source_suspect = true;
  e.claims = claims;
  e.note = std::move(note);
  return e;
}

std::vector<std::string> matrix_rows(const FormalMatrix& X) {
  std::vector<std::string> out;
  std::string s = serialize_matrix(X);
  std::string cur;
  for (char c : s) {
    if (c == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  auto C = [](int m, int n, bool uom) {
    CatalogClaims c;
    c.m = m;
    c.n = n;
    c.is_uom = uom;
    return c;
  };

  // -- small display matrices -------------------------------------------
  cat.push_back(entry("eq1.1", {"a", "A"}, C(2, 1, true)));
  {
    auto c = C(4, 2, true);
    cat.push_back(repaired_entry(
        "eq1.2", {"ab", "AB"}, {"ab", "aB", "Ab", "AB"}, c,
        "source shows 2 of the 4 rows; restored as the single-class sign-pattern matrix"));
    cat.push_back(repaired_entry(
        "eq1.3", {"ab", "Ac", "AC"}, {"ab", "aB", "Ac", "AC"}, c,
        "source shows 3 of the 4 rows; restored form has mu=2 across the first column"));
  }
  {
    auto c = C(4, 3, true);
    c.balanced = true;
    cat.push_back(entry("eq2.X", {"ace", "ADf", "bCF", "BdE"}, c));
  }
  {
    auto c = C(6, 4, true);
    c.balanced = false;
    cat.push_back(entry("eq2.Y", {"xyzw", "Xbde", "aYDf", "AcZE", "aBdW", "XCDF"}, c));
  }
  {
    auto c = C(11, 8, true);
    c.balanced = false;
    cat.push_back(entry("eq2.Z",
                        {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "ABdBdccd", "CdBcDdAe", "BdAdCDdD",
                         "BDDBeeeA", "CDAdBEdD", "ABDDdcEC", "dCdDABCE", "DACCECDB"},
                        c, "per-column renaming of the printed greek-letter matrix"));
  }
  cat.push_back(repaired_entry(
      "eq3",
      {"acegh", "acegH", "aceGh", "aceGH", "ADfgh", "ADfgH", "ADfGh", "ADfGH", "ADfGH", "bCFgh",
       "bCFgH", "bCFGh", "bCFGH", "bCFGH", "BdExy", "BdExY", "BdEXz", "BdEXZ"},
      {"acegh", "acegH", "aceGh", "aceGH", "ADfgh", "ADfgH", "ADfGh", "ADfGH", "bCFgh", "bCFgH",
       "bCFGh", "bCFGH", "BdExy", "BdExY", "BdEXz", "BdEXZ"},
      C(16, 5, true), "source duplicates two rows; the block construction gives 16"));
  cat.push_back(entry("eq4.1",
                      {"xace", "xAdf", "xbCF", "xBDE", "Xgik", "XGjl", "XhIL", "XHJK"},
                      C(8, 4, true)));
  cat.push_back(entry("eq4.2",
                      {"aceg", "adEh", "aDfG", "ACfh", "Aceg", "bDFG", "bdEH", "BCFH"},
                      C(8, 4, true)));
  cat.push_back(entry("eq8", {"aBCcb", "baBCc", "cbaBC", "CcbaB", "BCcba", "AAAAA"},
                      C(6, 5, true), "the genshift fixture for n = 5"));
  cat.push_back(entry("eq10", {"aceg", "aCfh", "adFG", "Acei", "AdfI", "bCFg", "BDEH"},
                      C(7, 4, true)));
  {
    auto c = C(8, 4, true);
    c.maximal = true;
    cat.push_back(entry("eq12", {"abcd", "aBeF", "aGCf", "agED", "Auvw", "AUxY", "AZVy", "AzXW"},
                        c));
    cat.push_back(entry("eq13", {"abcu", "abcU", "AdEv", "AdEV", "FBew", "FBeW", "fDCx", "fDCX"},
                        c));
  }
  cat.push_back(entry("sec6.10x5",
                      {"baBCc", "cbaBC", "CcbaB", "BCcba", "AAAAA", "CaCcb", "aACbb", "cBbBa",
                       "CABBa", "caCbC"},
                      C(10, 5, true)));

  // -- the six 8x7 classes ----------------------------------------------
  cat.push_back(repaired_entry(
      "J1",
      {"aaaaaaa", "Abbbbbb", "bABcccc", "BBAddddd", "cccABCD", "CddBADC", "dCDCDAB", "DDCDCBA"},
      {"aaaaaaa", "Abbbbbb", "bABcccc", "BBAdddd", "cccABCD", "CddBADC", "dCDCDAB", "DDCDCBA"},
      C(8, 7, true), "row 4 printed with 8 characters; unique deletion yielding a UOM"));
  cat.push_back(entry("J2",
                      {"aaaaaaa", "Abbbbbb", "bABcccc", "BcABddd", "cdcABCD", "CCddABC", "dDDCDAB",
                       "DBCDCDA"},
                      C(8, 7, true)));
  cat.push_back(repaired_entry(
      "J3",
      {"aaaaaaa", "Abbbbbb", "bAccBcc", "BcABcdd", "cdCAdbD", "CCddACB", "dDBDCAC", "DBDCDDA"},
      {"aaaaaaa", "Abbbbbb", "bAccBcc", "BcABcdd", "cdCAdBD", "CCddACB", "dDBDCAC", "DBDCDDA"},
      C(8, 7, true), "rows 2 and 5 printed non-orthogonal; the case fix off the shared block"));
  cat.push_back(entry("J4",
                      {"aaaaaaa", "Abbbbbb", "bAcccBc", "BcABdcd", "cddABCC", "CCCdAdB", "dDBDCAD",
                       "DBDCDDA"},
                      C(8, 7, true)));
  cat.push_back(repaired_entry(
      "J5",
      {"aaaaaaa", "Abbbbbb", "bAcccBc", "BcAddcB", "cddABCC", "CCCBAdd", "dDBCDAAD", "DBDDCDA"},
      {"aaaaaaa", "Abbbbbb", "bAcccBc", "BcAddcB", "cddABCC", "CCCBAdd", "dDBCDAD", "DBDDCDA"},
      C(8, 7, true), "row 7 printed with 8 characters; unique deletion yielding a UOM"));
  cat.push_back(repaired_entry(
      "J6",
      {"aaaaaaa", "Abbbbbb", "bAccccB", "BcAddBc", "cddABCC", "CCCBAdd", "dDBCDAAD", "DBDDCDA"},
      {"aaaaaaa", "Abbbbbb", "bAccccB", "BcAddBc", "cddABCC", "CCCBAdd", "dDBCDAD", "DBDDCDA"},
      C(8, 7, true), "row 7 printed with 8 characters; unique deletion yielding a UOM"));

  // -- Table IV -----------------------------------------------------------
  cat.push_back(entry("tab4.11x5",
                      {"cbaBC", "CcbaB", "BCcba", "AAAAA", "aBCBb", "baBbc", "CCcBa", "aCCbC",
                       "cacBc", "ccbba", "BcBba"},
                      C(11, 5, true)));
  cat.push_back(entry("tab4.10x6",
                      {"aaaaaa", "Abbcbb", "bBcACd", "bcCBAB", "BABddC", "cBCbDA", "CCADBD",
                       "BccCAc", "bAcCcd", "bBcdAD"},
                      C(10, 6, true)));
  cat.push_back(entry("tab4.11x6",
                      {"aAbbbb", "Abcccc", "ABdddd", "cCBADC", "CdCBAD", "CDDCBA", "adaaaB",
                       "caDaCb", "CDBDCa", "ccADCB", "aDdBcc"},
                      C(11, 6, true)));
  cat.push_back(entry("tab4.13x6.a",
                      {"aAbbbb", "Abcccc", "ABdddd", "bcADCB", "bCBADC", "BdCBAD", "BDDCBA",
                       "acaBaa", "aCBaaa", "aCbcaB", "acBbca", "bCbCBD", "aabbbb"},
                      C(13, 6, true)));
  cat.push_back(entry("tab4.13x6.b",
                      {"aAbbbb", "Abcccc", "ABdddd", "bcADCB", "bCBADC", "BdCBAD", "BDDCBA",
                       "aDaaBa", "BaDCbd", "BdBCaD", "adbdBd", "BDCBbD", "BdCDBd"},
                      C(13, 6, true)));
  cat.push_back(repaired_entry(
      "tab4.13x7.a",
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbab", "BCDdcba", "AAAAAAA", "aBCCCcC",
       "aBDDdce", "BadBccb", "aAdCcbd", "aDDDccC", "cadbdcc"},
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbaB", "BCDdcba", "AAAAAAA", "aBCCCcC",
       "aBDDdcc", "BadBccb", "aAdCcbd", "aDDDccC", "cadbdcc"},
      C(13, 7, true),
      "cyclic-block row case fix plus the unique letter fix in row 9"));
  cat.push_back(repaired_entry(
      "tab4.13x7.b",
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbab", "BCDdcba", "AAAAAAA", "DBCDaDb",
       "dBaDdcb", "adADAcC", "DcaBddb", "dAADaAd", "DdabABC"},
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbaB", "BCDdcba", "AAAAAAA", "DBCDaDb",
       "dBaDdcb", "adADAcC", "DcaBddb", "dAADaAd", "DdabABC"},
      C(13, 7, true), "cyclic-block row case fix"));
  {
    CatalogClaims c;
    c.m = 14;
    c.n = 7;
    cat.push_back(suspect_entry(
        "tab4.14x7",
        {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbab", "BCDdcba", "AAAAAAA", "aBCCCcC",
         "aBDDdce", "BadBccb", "aAdCcbd", "aDDDccC", "cadbdcc"},
        c, "source lists only 13 rows, identical to tab4.13x7.a; the missing row is lost"));
  }
  cat.push_back(repaired_entry(
      "tab4.15x7",
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbab", "BCDdcba", "AAAAAAA", "DDaDddb",
       "aBCDbDb", "adCDDdd", "aBBDBDc", "dcbABaD", "dcbaBcD", "dCbaBBD", "DDADBaC"},
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbaB", "BCDdcba", "AAAAAAA", "DDaDddb",
       "aBCDbDb", "adCDddd", "aBBDBDc", "dcbABaD", "dcbaBcD", "dCbaBBD", "DDADBaC"},
      C(15, 7, true), "cyclic-block row case fix plus the unique case fix in row 10"));
  cat.push_back(repaired_entry(
      "tab4.19x7",
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbab", "BCDdcba", "AAAAAAA", "DDaDddb",
       "aBCDbDb", "acAcBcc", "adCACdC", "aCCDBDD", "ddbabdA", "CcaABDc", "BdaACdc", "ddBaCdC",
       "dCbaBdA", "bdaAddc", "DcAaBbC"},
      {"baBCDdc", "cbaBCDd", "dcbaBCD", "DdcbaBC", "CDdcbaB", "BCDdcba", "AAAAAAA", "DDaDddb",
       "aBCDbDb", "acAcBcc", "adCACdC", "aCCDBDD", "ddbabdA", "CcaABDc", "BdaACdc", "ddBaCdC",
       "dCbaBdA", "bdaAddc", "DcAaBbC"},
      C(19, 7, true), "cyclic-block row case fix"));
  cat.push_back(repaired_entry(
      "tab4.13x8",
      {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdbEdD",
       "ABDDdcEC", "dCdDABCE", "DACCECDB", "ABdCCccd", "BDdcCecA", "BdAdcDdC"},
      {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdBEdD",
       "ABDDdcEC", "dCdDABCE", "DACCECDB", "ABdCCccd", "BDdcCecA", "BdAdcDdC"},
      C(13, 8, true), "case fix consistent with the shared eq2.Z block"));
  cat.push_back(repaired_entry(
      "tab4.14x8",
      {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdbEdD",
       "ABDDdcEC", "dCdDABCE", "DACCECDB", "ABdCCccd", "DDdcCeAB", "BdAdcDdC", "DBdcCAad"},
      {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdBEdD",
       "ABDDdcEC", "dCdDABCE", "DACCECDB", "ABdCCccd", "DDdcCeAB", "BdAdcDdC", "DBdcCAad"},
      C(14, 8, true), "case fix consistent with the shared eq2.Z block"));
  cat.push_back(repaired_entry(
      "tab4.15x8",
      {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdbEdD",
       "ABDDdcEC", "dCdDABCE", "DACCECDB", "ABdCCccd", "DDdcCeAB", "BdAdcDdC", "DAdcCBad",
       "BAdcCbad"},
      {"aaaaaaaa", "bbbAbbbb", "cccbcABc", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdBEdD",
       "ABDDdcEC", "dCdDABCE", "DACCECDB", "ABdCCccd", "DDdcCeAB", "BdAdcDdC", "DAdcCBad",
       "BAdcCbad"},
      C(15, 8, true), "case fix consistent with the shared eq2.Z block"));
  {
    CatalogClaims c;
    c.m = 17;
    c.n = 8;
    cat.push_back(suspect_entry(
        "tab4.17x8",
        {"bbbAebbd", "dbbBEbDA", "DDdAbcbD", "DAaBECab", "DabAECbd", "AdbdedbD", "bdCdeDAD",
         "aaaaaaaaa", "cccbcABc", "ABdBdccd", "CdBcDdAe", "BdAdCDdD", "BDDBeeeA", "CDAdbEdD",
         "ABDDdcEC", "dCdDABCE", "DACCECDB"},
        c,
        "row 8 printed with 9 characters; after the forced truncation the matrix is orthogonal "
        "but extendible and no single-character repair yields a UOM"));
  }
  cat.push_back(repaired_entry(
      "tab4.18x8",
      {"DbACEcbd", "ebbAebbd", "dbbBEbDA", "DDdAbcbD", "DAaBECab", "DabAECbd", "AdbdedbD",
       "bdCdeDAD", "aaaaaaaaa", "cccbcABc", "ABdBdccd", "CdBcDdAe", "BdAdCDdD", "EDDBeeeA",
       "CDAdbEdD", "ABDDdcEC", "dCdDABCE", "DACCECDB"},
      {"DbACEcbd", "ebbAebbd", "dbbBEbDA", "DDdAbcbD", "DAaBECab", "DabAECbd", "AdbdedbD",
       "bdCdeDAD", "aaaaaaaa", "cccbcABc", "ABdBdccd", "CdBcDdAe", "BdAdCDdD", "EDDBeeeA",
       "CDAdBEdD", "ABDDdcEC", "dCdDABCE", "DACCECDB"},
      C(18, 8, true), "all-a row truncated; case fix consistent with the shared eq2.Z block"));
  cat.push_back(repaired_entry(
      "tab4.19x8",
      {"DbCCEcAd", "DbCAEcad", "ebbAebbd", "dbbBEbDA", "DDdAbcbD", "DAaBECab", "DabAECbd",
       "AdbdedbD", "bdCdeDAD", "aaaaaaaaa", "cccbcABc", "ABdBdccd", "CdBcDdAe", "BdAdCDdD",
       "EDDBeeeA", "CDAdbEdD", "ABDDdcEC", "dCdDABCE", "DACCECDB"},
      {"DbCCEcAd", "DbCAEcad", "ebbAebbd", "dbbBEbDA", "DDdAbcbD", "DAaBECab", "DabAECbd",
       "AdbdedbD", "bdCdeDAD", "aaaaaaaa", "cccbcABc", "ABdBdccd", "CdBcDdAe", "BdAdCDdD",
       "EDDBeeeA", "CDAdBEdD", "ABDDdcEC", "dCdDABCE", "DACCECDB"},
      C(19, 8, true), "all-a row truncated; case fix consistent with the shared eq2.Z block"));

  // -- machine-found witnesses for the odd Theta_4 sizes -------------------
  cat.push_back(entry("search.9x4",
                      {"aaaa", "bbaA", "ABbb", "BABB", "abAb", "ABBb", "aBbA", "Abba", "ABbB"},
                      C(9, 4, true), "found by seeded orthogonal-completion search"));
  cat.push_back(entry("search.10x4",
                      {"aaaa", "bbAb", "bBbA", "BaAb", "AbbB", "bABB", "BABb", "BABB", "AaBB",
                       "BAbb"},
                      C(10, 4, true), "found by seeded orthogonal-completion search"));

  // -- constructed members -------------------------------------------------
  {
    FormalMatrix X43 = parse_matrix("ace\nADf\nbCF\nBdE");
    FormalMatrix full83 = full_standard(3);
    Row a0{VarRef{0, 0, false}};
    Row a1{VarRef{0, 0, true}};
    FormalMatrix head = FormalMatrix::from_rows({a0, a1});
    FormalMatrix cor8 = compose(head, {X43, full83});
    cat.push_back(entry("cor8.12x4", matrix_rows(cor8), C(12, 4, true),
                        "two-block composition of the 4x3 class over a full 8x3"));
  }
  cat.push_back(entry("full.16x4", matrix_rows(full_standard(4)), C(16, 4, true),
                      "the standard sign-pattern basis"));
  {
    FormalMatrix seed = parse_matrix("ab\naB\nAc\nAC");
    std::vector<Row> renamed;
    for (const Row& r : seed.row_list()) {
      Row q = r;
      for (auto& e : q) e.id += 3;
      renamed.push_back(q);
    }
    FormalMatrix seed2 = FormalMatrix::from_rows(renamed);
    FormalMatrix chain = double_matrix(seed, seed2, rotation_family(4));
    cat.push_back(entry("chain.8x6", matrix_rows(chain), C(8, 6, true),
                        "doubling of the 4x2 seed with mu=2 first column"));
  }

  // -- the two-qutrit pyramid ----------------------------------------------
  {
    CatalogEntry e;
    e.name = "pyramid";
    e.is_qudit = true;
    e.claims.m = 5;
    e.claims.n = 2;
    e.note = "five-state two-qutrit set; factors 3x3";
    cat.push_back(e);
  }
  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  fail(ErrorCode::UnknownEntry, name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

SelfTestResult catalog_self_test() {
  SelfTestResult res;
  auto record = [&](bool ok, const std::string& msg) {
    if (!ok) res.failures.push_back(msg);
  };
  for (const auto& e : catalog()) {
    if (e.is_qudit) {
      QuditProductSet s = e.qudit_set();
      record(s.state_count() == e.claims.m, e.name + ": state count");
      double worst = 0;
      for (int a = 0; a < s.state_count(); ++a)
        for (int b = a + 1; b < s.state_count(); ++b)
          worst = std::max(worst, std::abs(s.full_vector(a).dot(s.full_vector(b))));
      record(worst < 1e-12, e.name + ": pairwise orthogonality");
      continue;
    }
    if (e.source_suspect) {
      res.suspects.push_back(e.name + ": " + e.note);
      continue;
    }
    FormalMatrix X = e.matrix();
    record(X.rows() == e.claims.m && X.cols() == e.claims.n, e.name + ": size");
    if (e.claims.is_uom) record(is_uom(X) == *e.claims.is_uom, e.name + ": uom");
    if (e.claims.balanced) record(stats(X).balanced == *e.claims.balanced, e.name + ": balanced");
    if (e.claims.maximal) {
      bool maximal = true;
      for (const auto& Z : order_neighbors(X, OrderDirection::Up))
        if (is_uom(Z)) maximal = false;
      record(maximal == *e.claims.maximal, e.name + ": maximal");
    }
  }
  // group claims
  {
    std::vector<std::string> js = {"J1", "J2", "J3", "J4", "J5", "J6"};
    for (size_t a = 0; a < js.size(); ++a)
      for (size_t b = a + 1; b < js.size(); ++b)
        record(!are_equivalent(catalog_get(js[a]).matrix(), catalog_get(js[b]).matrix()),
               js[a] + " vs " + js[b] + ": expected inequivalent");
  }
  {
    bool eq = are_equivalent(catalog_get("tab4.13x6.a").matrix(),
                             catalog_get("tab4.13x6.b").matrix())
                  .has_value();
    res.notes.push_back(std::string("tab4.13x6.a vs tab4.13x6.b: ") +
                        (eq ? "equivalent" : "inequivalent"));
  }
  return res;
}

}  // namespace uom
