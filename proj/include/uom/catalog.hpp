#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uom/core.hpp"
#include "uom/qudit.hpp"

namespace uom {

/// Expected properties of a catalog entry, machine-checked by self_test.
struct CatalogClaims {
  int m = 0, n = 0;
  std::optional<bool> is_uom;
  std::optional<bool> balanced;
  std::optional<bool> maximal;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> source_rows;  // verbatim, may be anomalous
  std::vector<std::string> rows;         // working rows (repaired when needed)
  bool source_suspect = false;  // no unique repair exists; excluded from hard claims
  bool repaired = false;        // rows differ from source_rows
  CatalogClaims claims;
  std::string note;
  bool is_qudit = false;

  FormalMatrix matrix() const;       // parses `rows`
  QuditProductSet qudit_set() const; // pyramid only
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_get(const std::string& name);
std::vector<std::string> catalog_names();

struct SelfTestResult {
  std::vector<std::string> failures;   // human-readable claim violations
  std::vector<std::string> suspects;   // source_suspect entries, reported separately
  std::vector<std::string> notes;      // informational verdicts (e.g. equivalence reports)
  bool ok() const { return failures.empty(); }
};

/// Validates every catalog claim; suspect entries are reported, not asserted.
SelfTestResult catalog_self_test();

}  // namespace uom
