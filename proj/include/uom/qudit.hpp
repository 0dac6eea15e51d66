#pragma once

#include <vector>

#include <Eigen/Dense>

#include "uom/projector.hpp"

namespace uom {

/// Product vectors over factors of arbitrary local dimension.
struct QuditProductSet {
  std::vector<int> dims;
  std::vector<std::vector<Eigen::VectorXcd>> vectors;  // one factor list per state

  int state_count() const { return static_cast<int>(vectors.size()); }
  int total_dimension() const {
    int d = 1;
    for (int x : dims) d *= x;
    return d;
  }
  Eigen::VectorXcd full_vector(int i) const;
};

struct QuditProductEnumeration {
  QuditProductSet products;          // distinct solutions, projectively deduplicated
  bool continuum = false;            // some assignment admits a >= 2-dim factor space
};

/// All product vectors orthogonal to every state of the input set: each state
/// is assigned to one factor which must annihilate it; assignments leaving a
/// factor over-constrained are infeasible, assignments leaving one a >= 2
/// dimensional null space are reported as a continuum. Exact whenever every
/// feasible assignment pins each factor to a 1-dimensional null space.
QuditProductEnumeration qudit_orthogonal_product_vectors(const QuditProductSet& states,
                                                         double dedup_tol = 1e-8);

/// The five-state two-qutrit Pyramid set.
QuditProductSet pyramid_upb();

/// Complement-projector report for a qudit product set with rows dropped
/// (0-based); mirrors the multiqubit pipeline.
ProjectorReport qudit_pptes_report(const QuditProductSet& states,
                                   const std::vector<int>& dropped, const Tolerances& tol = {});

}  // namespace uom
