#include "uom/evaluation.hpp"

#include <cmath>

namespace uom {

uint64_t Rng::next_u64() {
  uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  // 53-bit mantissa, strictly inside (0,1)
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

std::complex<double> Rng::complex_gaussian() {
  double re = gaussian();
  double im = gaussian();
  return {re, im};
}

Eigen::VectorXcd Rng::unit_vector(int dim) {
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = complex_gaussian();
  v.normalize();
  return v;
}

Eigen::Vector2cd Evaluation::alpha(const VarRef& v) const {
  auto it = vectors.find({v.column, v.id});
  if (it == vectors.end())
    fail(ErrorCode::UnknownVariable, "no vector assigned to column " + std::to_string(v.column) +
                                         " id " + std::to_string(v.id));
  return v.primed ? perp2(it->second) : it->second;
}

Evaluation generic_evaluation(const FormalMatrix& X, uint64_t seed, double tol) {
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 1);
  Evaluation ev;
  ev.seed = seed;
  ev.genericity_tolerance = tol;
  for (int j = 0; j < X.cols(); ++j) {
    auto ids = X.column_ids(j);
    const int kRetries = 64;
    int attempt = 0;
    for (; attempt < kRetries; ++attempt) {
      std::map<std::pair<int, int>, Eigen::Vector2cd> draw;
      for (int id : ids) draw[{j, id}] = rng.unit_vector(2);
      bool generic = true;
      for (size_t a = 0; a < ids.size() && generic; ++a)
        for (size_t b = a + 1; b < ids.size() && generic; ++b) {
          double ov = std::abs(
              draw[{j, ids[a]}].dot(draw[{j, ids[b]}]));
          if (ov < tol || ov > 1.0 - tol) generic = false;
        }
      if (generic) {
        for (auto& [k, v] : draw) ev.vectors[k] = v;
        break;
      }
    }
    if (attempt == kRetries)
      fail(ErrorCode::GenericityFailure, "column " + std::to_string(j) + " resampling exhausted");
  }
  return ev;
}

std::vector<Eigen::VectorXcd> evaluate_rows(const Evaluation& eval, const std::vector<Row>& rows) {
  std::vector<Eigen::VectorXcd> out;
  for (const Row& r : rows) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(1);
    for (const VarRef& e : r) {
      Eigen::Vector2cd a = eval.alpha(e);
      Eigen::VectorXcd next(v.size() * 2);
      for (int i = 0; i < v.size(); ++i) {
        next(2 * i) = v(i) * a(0);
        next(2 * i + 1) = v(i) * a(1);
      }
      v = std::move(next);
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace uom
