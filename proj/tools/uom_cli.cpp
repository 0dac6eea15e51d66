// Command-line front end: verification, construction, equivalence, class
// enumeration, and PPT-entanglement reports for formal orthogonal matrices.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "uom/canonical.hpp"
#include "uom/catalog.hpp"
#include "uom/construct.hpp"
#include "uom/engine.hpp"
#include "uom/enumerate.hpp"
#include "uom/projector.hpp"
#include "uom/qudit.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudgetExceeded = 3;

struct Options {
  uint64_t seed = 0;
  bool as_json = false;
  double budget = 0.0;
  std::string drop;
  double tol = -1.0;
};

uom::Tolerances tolerances(const Options& o) {
  uom::Tolerances t;
  if (o.tol > 0) {
    t.orthogonality = o.tol;
    t.ppt = o.tol;
    t.nnls = o.tol;
  }
  return t;
}

// A positional argument names either a catalog entry or a file to parse.
uom::FormalMatrix load_matrix(const std::string& ref) {
  for (const auto& e : uom::catalog())
    if (e.name == ref && !e.is_qudit) return e.matrix();
  std::ifstream in(ref);
  if (!in) uom::fail(uom::ErrorCode::UnknownEntry, ref + " is neither a catalog name nor a file");
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  if (!text.empty() && text.front() == '{') return uom::matrix_from_json(text);
  return uom::parse_matrix(text);
}

std::vector<int> parse_drop(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int v = std::stoi(tok);
    if (v < 1) uom::fail(uom::ErrorCode::NotPresent, "rows are numbered from 1");
    out.push_back(v - 1);
  }
  return out;
}

json matrix_json(const uom::FormalMatrix& X) { return json::parse(uom::to_json(X)); }

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int cmd_verify(const Options& o, const std::string& ref) {
  uom::FormalMatrix X = load_matrix(ref);
  bool orth = uom::is_orthogonal_matrix(X);
  uom::MatrixStats st = uom::stats(X);
  json j;
  j["input"] = ref;
  j["m"] = X.rows();
  j["n"] = X.cols();
  j["orthogonal"] = orth;
  j["mu_max"] = st.mu_max;
  j["nu_per_column"] = st.nu_per_column;
  j["nu"] = st.nu_total;
  j["balanced"] = st.balanced;
  bool uomq = false;
  std::ostringstream text;
  text << ref << ": " << X.rows() << "x" << X.cols() << "\n"
       << "  orthogonal: " << (orth ? "yes" : "no") << "\n";
  if (orth) {
    uomq = uom::is_uom(X);
    j["uom"] = uomq;
    auto diag = uom::uom_diagnostics(X);
    j["diagnostics"] = {{"perp_occurs", diag.perp_occurs},
                        {"row_bound_s1", diag.row_bound_s1},
                        {"row_bound_s2", diag.row_bound_s2},
                        {"row_perp_sum", diag.row_perp_sum},
                        {"pivot_row_exists", diag.pivot_row_exists},
                        {"submatrix_bound", diag.submatrix_bound},
                        {"pair_product_sum", diag.pair_product_sum},
                        {"corollary6_applies", diag.corollary6_applies},
                        {"corollary6_agrees", diag.corollary6_agrees}};
    auto probe = uom::decomposition_probe(X);
    j["reducible"] = probe.reducible;
    j["decomposable_witness_found"] = probe.decomposition.has_value();
    text << "  uom: " << (uomq ? "yes" : "no") << "\n"
         << "  mu(X): " << st.mu_max << "  nu(X): " << st.nu_total
         << "  balanced: " << (st.balanced ? "yes" : "no") << "\n"
         << "  diagnostics pass: " << (diag.all_pass() ? "yes" : "no") << "\n"
         << "  reducible: " << (probe.reducible ? "yes" : "no")
         << "  decomposition witness: " << (probe.decomposition ? "found" : "none") << "\n";
  }
  emit(o, j, text.str());
  return orth ? kExitOk : kExitVerificationFailed;
}

int cmd_extend(const Options& o, const std::string& ref) {
  uom::FormalMatrix X = load_matrix(ref);
  auto row = uom::find_extension_row(X);
  auto en = uom::enumerate_orthogonal_rows(X);
  json j;
  j["extendible"] = row.has_value();
  j["orthogonal_rows"] = json::array();
  for (const auto& r : en.rows)
    j["orthogonal_rows"].push_back(uom::serialize_matrix(uom::FormalMatrix::from_rows({r})));
  j["wildcard_columns"] = en.wildcard_columns;
  std::ostringstream text;
  if (row)
    text << "extendible; witness row: "
         << uom::serialize_matrix(uom::FormalMatrix::from_rows({*row})) << "\n";
  else
    text << "unextendible (UOM)\n";
  text << en.rows.size() << " orthogonal rows over occurring variables";
  if (!en.wildcard_columns.empty()) {
    text << "; wildcard columns:";
    for (int c : en.wildcard_columns) text << " " << c + 1;
  }
  text << "\n";
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_equiv(const Options& o, const std::string& a, const std::string& b) {
  uom::FormalMatrix X = load_matrix(a), Y = load_matrix(b);
  auto w = uom::are_equivalent(X, Y);
  json j;
  j["equivalent"] = w.has_value();
  if (w) {
    j["row_perm"] = w->row_perm;
    j["col_perm"] = w->col_perm;
  }
  emit(o, j, std::string(w ? "equivalent" : "inequivalent") + "\n");
  return kExitOk;
}

int cmd_canon(const Options& o, const std::string& ref) {
  uom::FormalMatrix X = load_matrix(ref);
  auto cf = uom::canonical_form(X);
  // canonical representative: relabel rows/columns per the canonical labeling
  std::vector<uom::Row> rows(X.rows());
  for (int i = 0; i < X.rows(); ++i) {
    uom::Row r(X.cols());
    for (int p = 0; p < X.cols(); ++p) {
      uom::VarRef e = X.at(i, cf.col_order[p]);
      e.column = p;
      r[p] = e;
    }
    rows[cf.row_perm[i]] = std::move(r);
  }
  std::string rep = uom::serialize_matrix(uom::FormalMatrix::from_rows(rows));
  json j;
  j["canonical_rows"] = rep;
  std::string hex;
  for (unsigned char c : cf.encoded) {
    static const char* d = "0123456789abcdef";
    hex += d[c >> 4];
    hex += d[c & 15];
  }
  j["encoding"] = hex;
  emit(o, j, rep + "\n");
  return kExitOk;
}

int cmd_classes(const Options& o, int m, int n) {
  auto res = uom::enumerate_uom_classes(m, n, o.budget);
  json j;
  j["m"] = m;
  j["n"] = n;
  j["count"] = res.representatives.size();
  j["complete"] = res.complete;
  j["classes"] = json::array();
  for (const auto& X : res.representatives) j["classes"].push_back(uom::serialize_matrix(X));
  std::ostringstream text;
  text << res.representatives.size() << " UOM class(es) in O(" << m << "," << n << ")"
       << (res.complete ? "" : " [incomplete: budget exceeded]") << "\n";
  emit(o, j, text.str());
  return res.complete ? kExitOk : kExitBudgetExceeded;
}

int cmd_pptes(const Options& o, const std::string& ref) {
  std::vector<int> drop = parse_drop(o.drop);
  uom::ProjectorReport rep;
  if (ref == "pyramid") {
    rep = uom::qudit_pptes_report(uom::pyramid_upb(), drop, tolerances(o));
  } else {
    rep = uom::secondary_pptes_report(load_matrix(ref), drop, o.seed, tolerances(o));
  }
  json j = json::parse(uom::report_to_json(rep));
  j["input"] = ref;
  j["seed"] = o.seed;
  std::ostringstream text;
  text << ref << " drop={" << o.drop << "} seed=" << o.seed << "\n"
       << "  rank " << rep.rank << ", s " << rep.s << ", ppt "
       << (rep.ppt_all() ? "yes" : "no") << ", verdict " << uom::separability_name(rep.separability)
       << "\n";
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_theta(const Options& o, int n) {
  auto t = uom::theta_reference(n);
  json j;
  j["n"] = n;
  j["theta"] = t.theta;
  j["theta_prime"] = t.theta_prime;
  std::ostringstream text;
  text << "theta_" << n << " = " << t.theta << "\ntheta'_" << n << " = {";
  bool first = true;
  for (int v : t.theta_prime) {
    if (!first) text << ", ";
    text << v;
    first = false;
  }
  text << "}\n";
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_catalog_list(const Options& o) {
  json j = json::array();
  std::ostringstream text;
  for (const auto& e : uom::catalog()) {
    j.push_back({{"name", e.name},
                 {"m", e.claims.m},
                 {"n", e.claims.n},
                 {"suspect", e.source_suspect},
                 {"repaired", e.repaired},
                 {"qudit", e.is_qudit}});
    text << e.name << "  " << e.claims.m << "x" << e.claims.n
         << (e.is_qudit ? "  (qudit)" : "") << (e.source_suspect ? "  [suspect]" : "")
         << (e.repaired ? "  [repaired]" : "") << "\n";
  }
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_catalog_get(const Options& o, const std::string& name) {
  const auto& e = uom::catalog_get(name);
  json j;
  j["name"] = e.name;
  j["source_rows"] = e.source_rows;
  j["rows"] = e.rows;
  j["suspect"] = e.source_suspect;
  j["repaired"] = e.repaired;
  j["note"] = e.note;
  if (!e.is_qudit) j["matrix"] = matrix_json(e.matrix());
  std::ostringstream text;
  for (const auto& r : e.rows) text << r << "\n";
  if (!e.note.empty()) text << "# " << e.note << "\n";
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_catalog_selftest(const Options& o) {
  auto res = uom::catalog_self_test();
  json j;
  j["ok"] = res.ok();
  j["failures"] = res.failures;
  j["suspects"] = res.suspects;
  j["notes"] = res.notes;
  std::ostringstream text;
  text << (res.ok() ? "all claims hold" : "CLAIM FAILURES") << "\n";
  for (const auto& f : res.failures) text << "  FAIL " << f << "\n";
  for (const auto& s : res.suspects) text << "  suspect: " << s << "\n";
  for (const auto& n : res.notes) text << "  note: " << n << "\n";
  emit(o, j, text.str());
  return res.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_order_status(const Options& o, const std::string& ref) {
  auto st = uom::maximality_status(load_matrix(ref));
  json j;
  j["maximal"] = st.maximal;
  j["minimal"] = st.minimal;
  j["isolated"] = st.isolated;
  j["level"] = st.level;
  std::ostringstream text;
  text << "level " << st.level << ", maximal " << (st.maximal ? "yes" : "no") << ", minimal "
       << (st.minimal ? "yes" : "no") << ", isolated " << (st.isolated ? "yes" : "no") << "\n";
  emit(o, j, text.str());
  return kExitOk;
}

int cmd_order_descend(const Options& o, const std::vector<std::string>& refs) {
  std::vector<uom::FormalMatrix> reps;
  for (const auto& r : refs) reps.push_back(load_matrix(r));
  auto res = uom::descend_classes(reps, o.budget);
  json j;
  j["complete"] = res.complete;
  j["classes_total"] = res.classes_total;
  j["levels"] = json::object();
  std::ostringstream text;
  text << res.classes_total << " class(es)" << (res.complete ? "" : " [incomplete]") << "\n";
  for (const auto& [level, ms] : res.by_level) {
    json arr = json::array();
    for (const auto& X : ms) arr.push_back(uom::serialize_matrix(X));
    j["levels"][std::to_string(level)] = arr;
    text << "  level " << level << ": " << ms.size() << "\n";
  }
  emit(o, j, text.str());
  return res.complete ? kExitOk : kExitBudgetExceeded;
}

uom::PermFamily family_from_spec(const std::string& spec, int size) {
  if (spec == "rotation" || spec.empty()) return uom::rotation_family(size);
  if (spec == "klein") return uom::PermFamily::klein();
  if (spec.rfind("cyclic:", 0) == 0) {
    // one-line image list, 1-based, comma separated
    std::vector<int> sigma;
    std::stringstream ss(spec.substr(7));
    std::string tok;
    while (std::getline(ss, tok, ',')) sigma.push_back(std::stoi(tok) - 1);
    return uom::PermFamily::cyclic(sigma);
  }
  uom::fail(uom::ErrorCode::BadFamily, "unknown family spec: " + spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"formal orthogonal matrices: UOM construction, verification and PPTES reports"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "evaluation seed")->capture_default_str();
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_option("--budget", opt.budget, "time budget in seconds for searches");
  app.add_option("--drop", opt.drop, "1-based row indices, comma separated");
  app.add_option("--tol", opt.tol, "override numeric tolerances");

  std::string ref, ref2;
  int m = 0, n = 0;

  auto* verify = app.add_subcommand("verify", "orthogonality, UOM verdict, stats, diagnostics");
  verify->add_option("input", ref, "catalog name or file")->required();

  auto* extend = app.add_subcommand("extend", "extension witness and orthogonal-row enumeration");
  extend->add_option("input", ref, "catalog name or file")->required();

  auto* equiv = app.add_subcommand("equiv", "equivalence test with witness");
  equiv->add_option("a", ref, "first matrix")->required();
  equiv->add_option("b", ref2, "second matrix")->required();

  auto* canon = app.add_subcommand("canon", "canonical representative and encoding");
  canon->add_option("input", ref, "catalog name or file")->required();

  auto* classes = app.add_subcommand("classes", "enumerate UOM equivalence classes in O(m,n)");
  classes->add_option("m", m, "rows")->required();
  classes->add_option("n", n, "columns")->required();

  auto* construct = app.add_subcommand("construct", "generative constructions");
  construct->require_subcommand(1);
  auto* gens = construct->add_subcommand("genshift", "the (n+1) x n family for odd n");
  gens->add_option("n", n, "odd column count")->required();
  auto* comp = construct->add_subcommand("compose", "A |= (B_1, ..., B_r)");
  std::vector<std::string> comp_args;
  comp->add_option("inputs", comp_args, "head matrix then one block per head row")->required();
  auto* dbl = construct->add_subcommand("double", "(X1, X2) => Z doubling");
  std::string fam_spec;
  std::vector<std::string> dbl_args;
  dbl->add_option("inputs", dbl_args, "X1 and X2 (variable-disjoint)")->required();
  dbl->add_option("--family", fam_spec, "rotation | klein | cyclic:i1,i2,...");
  auto* lift = construct->add_subcommand("lift", "Lemma-style lifting of a left-block extension");
  int split = 0;
  lift->add_option("x", ref, "matrix to lift")->required();
  lift->add_option("y1", ref2, "extension of the left block")->required();
  lift->add_option("--split", split, "width of the left block")->required();

  auto* order = app.add_subcommand("order", "merge-order machinery");
  order->require_subcommand(1);
  auto* ostat = order->add_subcommand("status", "maximal/minimal/isolated/level");
  ostat->add_option("input", ref, "catalog name or file")->required();
  auto* odesc = order->add_subcommand("descend", "level descent from maximal representatives");
  std::vector<std::string> desc_args;
  odesc->add_option("inputs", desc_args, "maximal class representatives")->required();

  auto* pptes = app.add_subcommand("pptes", "complement-projector entanglement report");
  pptes->add_option("input", ref, "catalog name, file, or 'pyramid'")->required();

  auto* cata = app.add_subcommand("catalog", "built-in matrices");
  cata->require_subcommand(1);
  auto* clist = cata->add_subcommand("list", "all entries");
  auto* cget = cata->add_subcommand("get", "one entry with provenance");
  cget->add_option("name", ref, "entry name")->required();
  auto* cself = cata->add_subcommand("self-test", "validate every catalog claim");

  auto* theta = app.add_subcommand("theta", "minimum size and candidate-size set");
  theta->add_option("n", n, "qubit count")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(opt, ref);
    if (extend->parsed()) return cmd_extend(opt, ref);
    if (equiv->parsed()) return cmd_equiv(opt, ref, ref2);
    if (canon->parsed()) return cmd_canon(opt, ref);
    if (classes->parsed()) return cmd_classes(opt, m, n);
    if (construct->parsed()) {
      if (gens->parsed()) {
        auto X = uom::genshift(n);
        std::cout << uom::serialize_matrix(X) << "\n";
        return kExitOk;
      }
      if (comp->parsed()) {
        if (comp_args.size() < 2) uom::fail(uom::ErrorCode::WidthMismatch, "need A and blocks");
        uom::FormalMatrix A = load_matrix(comp_args[0]);
        std::vector<uom::FormalMatrix> blocks;
        for (size_t i = 1; i < comp_args.size(); ++i) blocks.push_back(load_matrix(comp_args[i]));
        std::cout << uom::serialize_matrix(uom::compose(A, blocks)) << "\n";
        return kExitOk;
      }
      if (dbl->parsed()) {
        if (dbl_args.size() != 2) uom::fail(uom::ErrorCode::WidthMismatch, "need X1 and X2");
        uom::FormalMatrix X1 = load_matrix(dbl_args[0]);
        uom::FormalMatrix X2 = load_matrix(dbl_args[1]);
        auto fam = family_from_spec(fam_spec, X1.rows());
        std::cout << uom::serialize_matrix(uom::double_matrix(X1, X2, fam)) << "\n";
        return kExitOk;
      }
      if (lift->parsed()) {
        uom::FormalMatrix X = load_matrix(ref), Y1 = load_matrix(ref2);
        std::cout << uom::serialize_matrix(uom::lift_extension(X, split, Y1)) << "\n";
        return kExitOk;
      }
    }
    if (order->parsed()) {
      if (ostat->parsed()) return cmd_order_status(opt, ref);
      if (odesc->parsed()) return cmd_order_descend(opt, desc_args);
    }
    if (pptes->parsed()) return cmd_pptes(opt, ref);
    if (cata->parsed()) {
      if (clist->parsed()) return cmd_catalog_list(opt);
      if (cget->parsed()) return cmd_catalog_get(opt, ref);
      if (cself->parsed()) return cmd_catalog_selftest(opt);
    }
    if (theta->parsed()) return cmd_theta(opt, n);
  } catch (const uom::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case uom::ErrorCode::BudgetExceeded: return kExitBudgetExceeded;
      case uom::ErrorCode::NotOrthogonal:
      case uom::ErrorCode::NotUOM: return kExitVerificationFailed;
      default: return kExitInputError;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
