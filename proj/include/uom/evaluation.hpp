#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "uom/core.hpp"

namespace uom {

/// Deterministic seedable generator (splitmix64 core) with Gaussian output via
/// Box-Muller, so evaluations are reproducible across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next_u64();
  double uniform();               // (0, 1)
  double gaussian();
  std::complex<double> complex_gaussian();
  Eigen::VectorXcd unit_vector(int dim);

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Assignment of unit vectors in C^2 to the variables of a matrix, Def. 1:
/// alpha(x') is the perpendicular of alpha(x), and independent same-column
/// variables are neither equal nor perpendicular (within tolerance).
struct Evaluation {
  std::map<std::pair<int, int>, Eigen::Vector2cd> vectors;  // (column, id) -> alpha
  uint64_t seed = 0;
  double genericity_tolerance = 1e-8;

  Eigen::Vector2cd alpha(const VarRef& v) const;
};

Evaluation generic_evaluation(const FormalMatrix& X, uint64_t seed,
                              double genericity_tolerance = 1e-8);

/// Kronecker products alpha(x_{i,1}) x ... x alpha(x_{i,n}) per row.
std::vector<Eigen::VectorXcd> evaluate_rows(const Evaluation& eval, const std::vector<Row>& rows);

inline Eigen::Vector2cd perp2(const Eigen::Vector2cd& v) {
  Eigen::Vector2cd w;
  w << -std::conj(v(1)), std::conj(v(0));
  return w;
}

}  // namespace uom
