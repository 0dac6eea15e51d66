#include "uom/projector.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace uom {

const char* separability_name(Separability s) {
  switch (s) {
    case Separability::Entangled: return "Entangled";
    case Separability::SeparableNumerical: return "SeparableNumerical";
    case Separability::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Eigen::MatrixXcd complement_projector(const std::vector<Eigen::VectorXcd>& vectors, int dimension,
                                      double orthogonality_tol) {
  for (size_t a = 0; a < vectors.size(); ++a) {
    if (vectors[a].size() != dimension)
      fail(ErrorCode::LengthMismatch, "vector dimension mismatch");
    for (size_t b = a + 1; b < vectors.size(); ++b)
      if (std::abs(vectors[a].dot(vectors[b])) > orthogonality_tol)
        fail(ErrorCode::NotOrthogonalSet, "input vectors are not pairwise orthogonal");
  }
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Identity(dimension, dimension);
  for (const auto& v : vectors) rho -= v * v.adjoint();
  return rho;
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, const std::vector<int>& dims,
                                   const std::vector<int>& subsystems) {
  int d = 1;
  for (int x : dims) d *= x;
  if (rho.rows() != d || rho.cols() != d)
    fail(ErrorCode::LengthMismatch, "density matrix does not match the dimension list");
  std::set<int> sub(subsystems.begin(), subsystems.end());
  const int n = static_cast<int>(dims.size());
  std::vector<int> stride(n);
  {
    int acc = 1;
    for (int q = n - 1; q >= 0; --q) {
      stride[q] = acc;
      acc *= dims[q];
    }
  }
  auto digits = [&](int idx, std::vector<int>* out) {
    for (int q = 0; q < n; ++q) {
      (*out)[q] = idx / stride[q] % dims[q];
    }
  };
  Eigen::MatrixXcd out(d, d);
  std::vector<int> bi(n), bj(n);
  for (int i = 0; i < d; ++i) {
    digits(i, &bi);
    for (int j = 0; j < d; ++j) {
      digits(j, &bj);
      int si = 0, sj = 0;
      for (int q = 0; q < n; ++q) {
        int a = bi[q], b = bj[q];
        if (sub.count(q)) std::swap(a, b);
        si += a * stride[q];
        sj += b * stride[q];
      }
      out(i, j) = rho(si, sj);
    }
  }
  return out;
}

std::vector<bool> ppt_check(const Eigen::MatrixXcd& rho, const std::vector<int>& dims,
                            double tol) {
  if ((rho - rho.adjoint()).norm() > 1e-9 * std::max(1.0, rho.norm()))
    fail(ErrorCode::NonHermitian, "ppt check needs a Hermitian matrix");
  const int n = static_cast<int>(dims.size());
  std::vector<bool> out;
  for (int mask = 1; mask < (1 << n); ++mask) {
    if (!(mask & 1)) continue;          // fix the first subsystem in the subset
    if (mask == (1 << n) - 1) continue;  // proper bipartitions only
    std::vector<int> sub;
    for (int q = 0; q < n; ++q)
      if (mask >> q & 1) sub.push_back(q);
    Eigen::MatrixXcd pt = partial_transpose(rho, dims, sub);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(pt, Eigen::EigenvaluesOnly);
    out.push_back(es.eigenvalues().minCoeff() >= -tol);
  }
  return out;
}

Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double* residual) {
  // Lawson-Hanson active set
  const int ncols = static_cast<int>(A.cols());
  Eigen::VectorXd x = Eigen::VectorXd::Zero(ncols);
  std::vector<bool> passive(ncols, false);
  Eigen::VectorXd w = A.transpose() * (b - A * x);
  const double eps = 1e-12 * std::max(1.0, b.norm());
  for (int iter = 0; iter < 3 * ncols + 30; ++iter) {
    int t = -1;
    double best = eps;
    for (int j = 0; j < ncols; ++j)
      if (!passive[j] && w(j) > best) {
        best = w(j);
        t = j;
      }
    if (t < 0) break;
    passive[t] = true;
    while (true) {
      std::vector<int> P;
      for (int j = 0; j < ncols; ++j)
        if (passive[j]) P.push_back(j);
      Eigen::MatrixXd Ap(A.rows(), P.size());
      for (size_t k = 0; k < P.size(); ++k) Ap.col(k) = A.col(P[k]);
      Eigen::VectorXd z = Ap.colPivHouseholderQr().solve(b);
      bool feasible = true;
      double alpha = 1.0;
      for (size_t k = 0; k < P.size(); ++k)
        if (z(k) <= 0) {
          feasible = false;
          double step = x(P[k]) / (x(P[k]) - z(k));
          alpha = std::min(alpha, step);
        }
      if (feasible) {
        x.setZero();
        for (size_t k = 0; k < P.size(); ++k) x(P[k]) = z(k);
        break;
      }
      for (size_t k = 0; k < P.size(); ++k) x(P[k]) += alpha * (z(k) - x(P[k]));
      for (size_t k = 0; k < P.size(); ++k)
        if (x(P[k]) <= eps) {
          passive[P[k]] = false;
          x(P[k]) = 0;
        }
    }
    w = A.transpose() * (b - A * x);
  }
  if (residual) *residual = (A * x - b).norm();
  return x;
}

namespace {

Eigen::VectorXd real_embedding(const Eigen::MatrixXcd& H) {
  Eigen::VectorXd v(2 * H.size());
  int k = 0;
  for (int j = 0; j < H.cols(); ++j)
    for (int i = 0; i < H.rows(); ++i) {
      v(k++) = H(i, j).real();
      v(k++) = H(i, j).imag();
    }
  return v;
}

}  // namespace

Separability separability_verdict(const Eigen::MatrixXcd& rho,
                                  const std::vector<Eigen::VectorXcd>& product_vectors,
                                  const Tolerances& tol, double* nnls_res_out,
                                  double* span_res_out) {
  double norm = rho.norm();
  if (product_vectors.empty()) {
    return norm > 1e-12 ? Separability::Entangled : Separability::Inconclusive;
  }
  Eigen::MatrixXd A(2 * rho.size(), product_vectors.size());
  for (size_t k = 0; k < product_vectors.size(); ++k) {
    const auto& v = product_vectors[k];
    Eigen::MatrixXcd P = v * v.adjoint() / v.squaredNorm();
    A.col(static_cast<int>(k)) = real_embedding(P);
  }
  Eigen::VectorXd b = real_embedding(rho);
  double nnls_res = 0.0;
  nnls(A, b, &nnls_res);
  if (nnls_res_out) *nnls_res_out = nnls_res;
  double span_res = (A * A.colPivHouseholderQr().solve(b) - b).norm();
  if (span_res_out) *span_res_out = span_res;
  if (nnls_res <= tol.nnls * norm) return Separability::SeparableNumerical;
  if (span_res > tol.span * norm) return Separability::Entangled;
  return Separability::Inconclusive;
}

ProjectorReport secondary_pptes_report(const FormalMatrix& X, const std::vector<int>& dropped_rows,
                                       uint64_t seed, const Tolerances& tol) {
  if (!is_uom(X)) fail(ErrorCode::NotUOM, "the source matrix must be a UOM");
  for (int i : dropped_rows)
    if (i < 0 || i >= X.rows()) fail(ErrorCode::NotPresent, "dropped row out of range");

  FormalMatrix Y = dropped_rows.empty() ? X : X.without_rows(dropped_rows);
  OrthogonalRowSet orth = enumerate_orthogonal_rows(Y);

  ProjectorReport rep;
  rep.wildcard_columns = orth.wildcard_columns;
  if (dropped_rows.size() <= 1 && !orth.wildcard_columns.empty())
    fail(ErrorCode::NotOrthogonal, "single-row drop produced wildcard columns");

  Evaluation ev = generic_evaluation(X, seed);
  const int n = X.cols();
  rep.dimension = 1 << n;
  auto vecs = evaluate_rows(ev, Y.row_list());
  for (size_t a = 0; a < vecs.size(); ++a)
    for (size_t b = a + 1; b < vecs.size(); ++b)
      rep.max_overlap = std::max(rep.max_overlap, std::abs(vecs[a].dot(vecs[b])));
  rep.rho = complement_projector(vecs, rep.dimension, tol.orthogonality);
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.rho, Eigen::EigenvaluesOnly);
    double top = std::max(es.eigenvalues().maxCoeff(), 1.0);
    rep.rank = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i)
      if (es.eigenvalues()(i) > tol.rank * top) ++rep.rank;
  }
  rep.product_rows = orth.rows;
  rep.product_vectors_in_range = evaluate_rows(ev, orth.rows);
  rep.s = static_cast<int>(orth.rows.size());
  rep.ppt = ppt_check(rep.rho, std::vector<int>(n, 2), tol.ppt);
  rep.separability = separability_verdict(rep.rho, rep.product_vectors_in_range, tol,
                                          &rep.nnls_residual, &rep.span_residual);
  return rep;
}

std::string report_to_json(const ProjectorReport& r) {
  nlohmann::json j;
  j["dimension"] = r.dimension;
  j["rank"] = r.rank;
  j["s"] = r.s;
  j["ppt"] = r.ppt;
  j["verdict"] = separability_name(r.separability);
  j["residuals"] = {{"nnls", r.nnls_residual},
                    {"span", r.span_residual},
                    {"max_overlap", r.max_overlap}};
  j["wildcard_columns"] = r.wildcard_columns;
  auto rows = nlohmann::json::array();
  for (const auto& row : r.product_rows) {
    auto jr = nlohmann::json::array();
    for (const auto& e : row) jr.push_back({{"id", e.id}, {"primed", e.primed}});
    rows.push_back(jr);
  }
  j["product_rows"] = rows;
  auto vecs = nlohmann::json::array();
  for (const auto& v : r.product_vectors_in_range) {
    auto jv = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) jv.push_back({v(i).real(), v(i).imag()});
    vecs.push_back(jv);
  }
  j["vectors"] = vecs;
  return j.dump();
}

}  // namespace uom
