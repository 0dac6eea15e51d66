#include "uom/qudit.hpp"

#include <cmath>
#include <set>

namespace uom {

Eigen::VectorXcd QuditProductSet::full_vector(int i) const {
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
  for (const auto& f : vectors[i]) {
    Eigen::VectorXcd next(v.size() * f.size());
    for (int a = 0; a < v.size(); ++a)
      for (int b = 0; b < f.size(); ++b) next(a * f.size() + b) = v(a) * f(b);
    v = std::move(next);
  }
  return v;
}

QuditProductEnumeration qudit_orthogonal_product_vectors(const QuditProductSet& states,
                                                         double dedup_tol) {
  const int n = static_cast<int>(states.dims.size());
  const int m = states.state_count();
  QuditProductEnumeration out;
  out.products.dims = states.dims;
  if (m == 0) {
    out.continuum = true;  // no constraints at all
    return out;
  }
  long long total = 1;
  for (int i = 0; i < m; ++i) {
    total *= n;
    if (total > 2'000'000) fail(ErrorCode::Unsupported, "too many factor assignments");
  }
  std::vector<int> assign(m, 0);
  std::vector<Eigen::VectorXcd> found;  // full vectors for dedup
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int i = 0; i < m; ++i) {
      assign[i] = static_cast<int>(c % n);
      c /= n;
    }
    // constraints per factor
    std::vector<std::vector<const Eigen::VectorXcd*>> cons(n);
    for (int i = 0; i < m; ++i) cons[assign[i]].push_back(&states.vectors[i][assign[i]]);
    std::vector<Eigen::VectorXcd> sol(n);
    bool feasible = true, wide = false;
    for (int f = 0; f < n && feasible; ++f) {
      const int d = states.dims[f];
      Eigen::MatrixXcd A(cons[f].size(), d);
      for (size_t r = 0; r < cons[f].size(); ++r) A.row(static_cast<int>(r)) = cons[f][r]->adjoint();
      if (cons[f].empty()) {
        wide = d >= 2;
        if (d == 1) sol[f] = Eigen::VectorXcd::Ones(1);
        continue;
      }
      Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
      int rank = 0;
      double top = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
      for (int k = 0; k < svd.singularValues().size(); ++k)
        if (svd.singularValues()(k) > 1e-10 * std::max(top, 1.0)) ++rank;
      int nulldim = d - rank;
      if (nulldim == 0) {
        feasible = false;
      } else if (nulldim >= 2) {
        wide = true;
      } else {
        sol[f] = svd.matrixV().col(d - 1);
      }
    }
    if (!feasible) continue;
    if (wide) {
      out.continuum = true;
      continue;
    }
    std::vector<Eigen::VectorXcd> factors(n);
    for (int f = 0; f < n; ++f) factors[f] = sol[f].normalized();
    QuditProductSet tmp{states.dims, {factors}};
    Eigen::VectorXcd full = tmp.full_vector(0);
    bool dup = false;
    for (const auto& g : found)
      if (std::abs(std::abs(g.dot(full)) - 1.0) < dedup_tol) dup = true;
    if (!dup) {
      found.push_back(full);
      out.products.vectors.push_back(std::move(factors));
    }
  }
  return out;
}

QuditProductSet pyramid_upb() {
  const double h = 0.5 * std::sqrt(1.0 + std::sqrt(5.0));
  const double N = 2.0 / std::sqrt(5.0 + std::sqrt(5.0));
  auto v = [&](int i) {
    Eigen::VectorXcd w(3);
    w << N * std::cos(2.0 * M_PI * i / 5.0), N * std::sin(2.0 * M_PI * i / 5.0), N * h;
    return w;
  };
  QuditProductSet s;
  s.dims = {3, 3};
  for (int i = 0; i < 5; ++i) s.vectors.push_back({v(i), v((2 * i) % 5)});
  return s;
}

ProjectorReport qudit_pptes_report(const QuditProductSet& states, const std::vector<int>& dropped,
                                   const Tolerances& tol) {
  std::set<int> drop(dropped.begin(), dropped.end());
  for (int i : drop)
    if (i < 0 || i >= states.state_count()) fail(ErrorCode::NotPresent, "dropped state out of range");
  QuditProductSet kept{states.dims, {}};
  for (int i = 0; i < states.state_count(); ++i)
    if (!drop.count(i)) kept.vectors.push_back(states.vectors[i]);

  ProjectorReport rep;
  rep.dimension = states.total_dimension();
  std::vector<Eigen::VectorXcd> vecs;
  for (int i = 0; i < kept.state_count(); ++i) vecs.push_back(kept.full_vector(i));
  for (size_t a = 0; a < vecs.size(); ++a)
    for (size_t b = a + 1; b < vecs.size(); ++b)
      rep.max_overlap = std::max(rep.max_overlap, std::abs(vecs[a].dot(vecs[b])));
  rep.rho = complement_projector(vecs, rep.dimension, tol.orthogonality);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rep.rho, Eigen::EigenvaluesOnly);
  double top = std::max(es.eigenvalues().maxCoeff(), 1.0);
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > tol.rank * top) ++rep.rank;

  QuditProductEnumeration en = qudit_orthogonal_product_vectors(kept);
  rep.s = en.products.state_count();
  for (int i = 0; i < rep.s; ++i)
    rep.product_vectors_in_range.push_back(en.products.full_vector(i));
  if (en.continuum) rep.wildcard_columns = {-1};  // continuum marker
  rep.ppt = ppt_check(rep.rho, states.dims, tol.ppt);
  rep.separability = separability_verdict(rep.rho, rep.product_vectors_in_range, tol,
                                          &rep.nnls_residual, &rep.span_residual);
  return rep;
}

}  // namespace uom
