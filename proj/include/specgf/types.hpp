#pragma once

#include <complex>
#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace specgf {

using cx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using SpMat = Eigen::SparseMatrix<cx>;
using Index = Eigen::Index;

inline constexpr cx iu{0.0, 1.0};

/// Numeric tolerances shared across the library. All checks route through
/// this record so a sweep driver can tighten or relax them in one place.
struct NumericPolicy {
  double hermiticity_rtol = 1e-12;
  double trace_tol = 1e-12;
  double thermal_fixed_tol = 1e-10;   // ||D rho_th|| acceptance
  double commutant_tol = 1e-12;       // ||[H0, rho_th]||, ||[H1, rho_th]||
  double solve_rtol = 1e-10;          // relative residual of linear solves
  double pole_rank_cutoff = 1e-10;    // |theta| cutoff in shift-invert
  double pole_proximity_rtol = 1e-8;  // rational evaluation near a pole
  double psd_tol = 1e-9;              // min eigenvalue drift of states
};

NumericPolicy& numeric_policy();

}  // namespace specgf
