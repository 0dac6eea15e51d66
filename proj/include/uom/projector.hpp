#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "uom/engine.hpp"
#include "uom/evaluation.hpp"

namespace uom {

enum class Separability { Entangled, SeparableNumerical, Inconclusive };

const char* separability_name(Separability s);

struct Tolerances {
  double orthogonality = 1e-10;  // pairwise OPS overlaps
  double rank = 1e-8;            // singular values relative to the largest
  double ppt = 1e-9;             // minimum partial-transpose eigenvalue
  double nnls = 1e-8;            // relative nonnegative reconstruction residual
  double span = 1e-6;            // relative span-membership residual
};

struct ProjectorReport {
  int dimension = 0;
  int rank = 0;
  Eigen::MatrixXcd rho;
  std::vector<bool> ppt;  // one verdict per bipartition (subsets containing qubit 0)
  bool ppt_all() const {
    for (bool b : ppt)
      if (!b) return false;
    return true;
  }
  std::vector<Eigen::VectorXcd> product_vectors_in_range;
  std::vector<Row> product_rows;              // formal provenance, when known
  int s = 0;                                  // count of product vectors
  Separability separability = Separability::Inconclusive;
  std::vector<int> wildcard_columns;          // nonempty only for multi-row drops
  double nnls_residual = 0.0;
  double span_residual = 0.0;
  double max_overlap = 0.0;                   // worst OPS pairwise overlap
};

/// rho = I - sum |psi_i><psi_i| for a pairwise-orthogonal set.
Eigen::MatrixXcd complement_projector(const std::vector<Eigen::VectorXcd>& vectors, int dimension,
                                      double orthogonality_tol = 1e-10);

/// Partial transpose over the given subsystems.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, const std::vector<int>& dims,
                                   const std::vector<int>& subsystems);

/// One verdict per bipartition (2^{n-1}-1 of them, subsets containing the
/// first subsystem): minimum eigenvalue >= -tol.
std::vector<bool> ppt_check(const Eigen::MatrixXcd& rho, const std::vector<int>& dims,
                            double tol = 1e-9);

/// Nonnegative least squares (Lawson-Hanson). Returns coefficients; residual
/// is written to *residual.
Eigen::VectorXd nnls(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, double* residual);

/// Separability certificate over an exhaustive list of range product vectors:
/// empty list with rho != 0 is entangled; a nonnegative reconstruction within
/// tolerance certifies separability; rho outside the span certifies
/// entanglement; otherwise inconclusive.
Separability separability_verdict(const Eigen::MatrixXcd& rho,
                                  const std::vector<Eigen::VectorXcd>& product_vectors,
                                  const Tolerances& tol = {}, double* nnls_residual = nullptr,
                                  double* span_residual = nullptr);

/// The Sec. VI pipeline: drop rows from a UOM, enumerate all formal rows
/// orthogonal to the remainder, evaluate generically, build the complement
/// projector and classify. dropped_rows are 0-based; an empty set gives the
/// primary (full-UPB) report.
ProjectorReport secondary_pptes_report(const FormalMatrix& X, const std::vector<int>& dropped_rows,
                                       uint64_t seed, const Tolerances& tol = {});

std::string report_to_json(const ProjectorReport& r);

}  // namespace uom
