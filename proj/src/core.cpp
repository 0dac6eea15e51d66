#include "uom/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace uom {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::RaggedRows: return "RaggedRows";
    case ErrorCode::BadToken: return "BadToken";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NotUOM: return "NotUOM";
    case ErrorCode::VariableCollision: return "VariableCollision";
    case ErrorCode::WidthMismatch: return "WidthMismatch";
    case ErrorCode::EvenN: return "EvenN";
    case ErrorCode::BadFamily: return "BadFamily";
    case ErrorCode::SplitMismatch: return "SplitMismatch";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::DependentPair: return "DependentPair";
    case ErrorCode::NotPresent: return "NotPresent";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotOrthogonalSet: return "NotOrthogonalSet";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::GenericityFailure: return "GenericityFailure";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnderConstrained: return "UnderConstrained";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Error";
}

FormalMatrix::FormalMatrix(int m, int n, std::vector<VarRef> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
  if (m_ < 1 || n_ < 1 || entries_.size() != static_cast<size_t>(m_) * n_)
    fail(ErrorCode::EmptyInput, "matrix must be at least 1x1 with m*n entries");
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (at(i, j).column != j)
        fail(ErrorCode::VariableCollision, "entry at (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") is scoped to column " +
                                               std::to_string(at(i, j).column));
      if (at(i, j).id < 0) fail(ErrorCode::BadToken, "negative variable id");
    }
}

FormalMatrix FormalMatrix::from_rows(const std::vector<Row>& rows) {
  if (rows.empty()) fail(ErrorCode::EmptyInput, "no rows");
  size_t n = rows[0].size();
  std::vector<VarRef> es;
  es.reserve(rows.size() * n);
  for (const Row& r : rows) {
    if (r.size() != n) fail(ErrorCode::RaggedRows, "rows of unequal length");
    es.insert(es.end(), r.begin(), r.end());
  }
  return FormalMatrix(static_cast<int>(rows.size()), static_cast<int>(n), std::move(es));
}

Row FormalMatrix::row(int i) const {
  return Row(entries_.begin() + static_cast<size_t>(i) * n_,
             entries_.begin() + static_cast<size_t>(i + 1) * n_);
}

std::vector<Row> FormalMatrix::row_list() const {
  std::vector<Row> out;
  out.reserve(m_);
  for (int i = 0; i < m_; ++i) out.push_back(row(i));
  return out;
}

std::vector<int> FormalMatrix::column_ids(int j) const {
  std::set<int> ids;
  for (int i = 0; i < m_; ++i) ids.insert(at(i, j).id);
  return {ids.begin(), ids.end()};
}

FormalMatrix FormalMatrix::normalized() const {
  std::vector<std::map<int, int>> remap(n_);
  std::vector<VarRef> es = entries_;
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) {
      auto& mp = remap[j];
      VarRef& e = es[static_cast<size_t>(i) * n_ + j];
      auto it = mp.find(e.id);
      if (it == mp.end()) it = mp.emplace(e.id, static_cast<int>(mp.size())).first;
      e.id = it->second;
    }
  return FormalMatrix(m_, n_, std::move(es));
}

FormalMatrix FormalMatrix::without_rows(const std::vector<int>& drop) const {
  std::set<int> d(drop.begin(), drop.end());
  std::vector<Row> keep;
  for (int i = 0; i < m_; ++i)
    if (!d.count(i)) keep.push_back(row(i));
  return from_rows(keep);
}

FormalMatrix FormalMatrix::with_row(const Row& r) const {
  auto rows = row_list();
  rows.push_back(r);
  return from_rows(rows);
}

FormalMatrix FormalMatrix::sub_columns(const std::vector<int>& keep) const {
  std::vector<Row> rows(m_);
  for (int i = 0; i < m_; ++i) {
    Row r;
    for (size_t k = 0; k < keep.size(); ++k) {
      VarRef e = at(i, keep[k]);
      e.column = static_cast<int>(k);
      r.push_back(e);
    }
    rows[i] = std::move(r);
  }
  return from_rows(rows);
}

bool rows_orthogonal(const Row& r1, const Row& r2) {
  if (r1.size() != r2.size()) fail(ErrorCode::LengthMismatch, "rows of unequal length");
  for (size_t j = 0; j < r1.size(); ++j) {
    if (r1[j].column != r2[j].column)
      fail(ErrorCode::LengthMismatch, "rows with mismatched column scoping");
    if (r2[j] == perp(r1[j])) return true;
  }
  return false;
}

bool is_orthogonal_matrix(const FormalMatrix& X) {
  for (int i = 0; i < X.rows(); ++i)
    for (int k = i + 1; k < X.rows(); ++k) {
      bool orth = false;
      for (int j = 0; j < X.cols() && !orth; ++j) orth = X.at(k, j) == perp(X.at(i, j));
      if (!orth) return false;
    }
  return true;
}

MatrixStats stats(const FormalMatrix& X) {
  MatrixStats s;
  s.nu_per_column.assign(X.cols(), 0);
  for (int j = 0; j < X.cols(); ++j) {
    std::set<int> ids;
    for (int i = 0; i < X.rows(); ++i) {
      ids.insert(X.at(i, j).id);
      s.mu[X.at(i, j)]++;
    }
    s.nu_per_column[j] = static_cast<int>(ids.size());
    s.nu_total += s.nu_per_column[j];
  }
  s.balanced = true;
  for (const auto& [v, c] : s.mu) {
    s.mu_max = std::max(s.mu_max, c);
    if (mu_of(s, perp(v)) != c) s.balanced = false;
  }
  return s;
}

// ---- parsing ------------------------------------------------------------

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  std::vector<std::string> out;
  for (auto& l : lines) {
    size_t a = l.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = l.find_last_not_of(" \t");
    out.push_back(l.substr(a, b - a + 1));
  }
  return out;
}

bool has_space(const std::string& s) { return s.find_first_of(" \t") != std::string::npos; }

}  // namespace

FormalMatrix parse_rows(const std::vector<std::string>& lines) {
  if (lines.empty()) fail(ErrorCode::EmptyInput, "no rows");
  bool extended = false;
  for (const auto& l : lines) extended = extended || has_space(l);

  // per-column letter/name -> id, in first-appearance order
  std::vector<std::map<std::string, int>> names;
  std::vector<Row> rows;
  size_t n = 0;
  for (const auto& line : lines) {
    std::vector<std::pair<std::string, bool>> toks;  // (name, primed)
    if (extended) {
      std::istringstream is(line);
      std::string t;
      while (is >> t) {
        bool primed = !t.empty() && t.back() == '\'';
        if (primed) t.pop_back();
        if (t.empty()) fail(ErrorCode::BadToken, "empty token");
        for (char c : t)
          if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            fail(ErrorCode::BadToken, "token '" + t + "'");
        toks.emplace_back(t, primed);
      }
    } else {
      for (char c : line) {
        if (!std::isalpha(static_cast<unsigned char>(c)))
          fail(ErrorCode::BadToken, std::string("character '") + c + "'");
        bool primed = std::isupper(static_cast<unsigned char>(c));
        toks.emplace_back(std::string(1, static_cast<char>(std::tolower(c))), primed);
      }
    }
    if (rows.empty()) {
      n = toks.size();
      if (n == 0) fail(ErrorCode::EmptyInput, "empty first row");
      names.resize(n);
    } else if (toks.size() != n) {
      fail(ErrorCode::RaggedRows, "row '" + line + "' has " + std::to_string(toks.size()) +
                                      " entries, expected " + std::to_string(n));
    }
    Row r;
    for (size_t j = 0; j < n; ++j) {
      auto& mp = names[j];
      auto it = mp.find(toks[j].first);
      if (it == mp.end()) it = mp.emplace(toks[j].first, static_cast<int>(mp.size())).first;
      r.push_back(VarRef{static_cast<int>(j), it->second, toks[j].second});
    }
    rows.push_back(std::move(r));
  }
  return FormalMatrix::from_rows(rows);
}

FormalMatrix parse_matrix(const std::string& text) { return parse_rows(split_lines(text)); }

std::string serialize_matrix(const FormalMatrix& X) {
  FormalMatrix N = X.normalized();
  bool compact = true;
  for (int j = 0; j < N.cols(); ++j)
    if (N.column_ids(j).size() > 26) compact = false;
  std::string out;
  for (int i = 0; i < N.rows(); ++i) {
    if (i) out += '\n';
    for (int j = 0; j < N.cols(); ++j) {
      VarRef e = N.at(i, j);
      if (compact) {
        char c = static_cast<char>('a' + e.id);
        out += e.primed ? static_cast<char>(std::toupper(c)) : c;
      } else {
        if (j) out += ' ';
        out += 'y' + std::to_string(e.id);
        if (e.primed) out += '\'';
      }
    }
  }
  return out;
}

std::string to_json(const FormalMatrix& X) {
  nlohmann::json j;
  j["m"] = X.rows();
  j["n"] = X.cols();
  auto rows = nlohmann::json::array();
  for (int i = 0; i < X.rows(); ++i) {
    auto r = nlohmann::json::array();
    for (int k = 0; k < X.cols(); ++k)
      r.push_back({{"id", X.at(i, k).id}, {"primed", X.at(i, k).primed}});
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j.dump();
}

FormalMatrix matrix_from_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  int m = j.at("m"), n = j.at("n");
  std::vector<Row> rows;
  for (const auto& jr : j.at("rows")) {
    Row r;
    int col = 0;
    for (const auto& je : jr)
      r.push_back(VarRef{col++, je.at("id").get<int>(), je.at("primed").get<bool>()});
    rows.push_back(std::move(r));
  }
  if (static_cast<int>(rows.size()) != m || (m > 0 && static_cast<int>(rows[0].size()) != n))
    fail(ErrorCode::RaggedRows, "json dimensions disagree with rows");
  return FormalMatrix::from_rows(rows);
}

}  // namespace uom
