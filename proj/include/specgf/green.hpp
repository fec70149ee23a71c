#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "specgf/model.hpp"

namespace specgf {

enum class GreenKind { driven, non_driven };

/// Finite spectral poles, conjugate-paired, sorted by |Re|.
struct PoleSet {
  GreenKind kind = GreenKind::driven;
  std::vector<cx> poles;

  std::size_t pair_count() const { return poles.size() / 2; }
};

struct SteadyMethod {
  enum Kind { direct, dyson, series, polynomial } kind = direct;
  int order = 0;  // series truncation

  static SteadyMethod Direct() { return {direct, 0}; }
  static SteadyMethod Dyson() { return {dyson, 0}; }
  static SteadyMethod Series(int k) { return {series, k}; }
  static SteadyMethod Polynomial() { return {polynomial, 0}; }
};

/// Factorized solve of A x = b restricted to the trace-free subspace via the
/// bordered system [[A, t], [t*, 0]]. Falls back to a rank-revealing dense
/// factorization when the sparse LU cannot deliver the requested residual.
class BorderedSolver {
 public:
  BorderedSolver(const SpMat& a, const CVec& unit);
  ~BorderedSolver();
  BorderedSolver(BorderedSolver&&) noexcept;
  BorderedSolver& operator=(BorderedSolver&&) noexcept;

  CVec solve(const CVec& b) const;  // throws on irreducible failure
  double last_residual() const { return last_residual_; }
  bool used_dense_fallback() const { return dense_fallback_; }

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
  mutable double last_residual_ = 0.0;
  bool dense_fallback_ = false;
};

/// Solve (F0 [- P] - zeta H1) x = operand on the traceless subspace.
CVec green_apply(const SpectralSystem& s, GreenKind kind, double zeta, const CVec& operand);
QOperator green_apply(const LindbladModel& model, GreenKind kind, double zeta,
                      const QOperator& operand);

/// Dense matrix of X0(zeta) = G0(zeta) P (or X = G P) on the full space.
CMat transfer_matrix(const SpectralSystem& s, GreenKind kind, double zeta);

struct SteadyResult {
  CVec rho;
  double spectral_radius = -1.0;  // of X0, reported for the series method
  bool convergent = true;         // false when series requested with radius >= 1
};

SteadyResult steady_state(const SpectralSystem& s, double zeta, SteadyMethod method);
QOperator steady_state(const LindbladModel& model, double zeta, SteadyMethod method);

/// || (1 - G0 P) G - G0 || over a traceless probe basis, relative to ||G0||.
/// `perturbation` is a test hook that corrupts G by the given relative amount.
double dyson_residual(const SpectralSystem& s, double zeta, int probes = 0,
                      double perturbation = 0.0);

struct CommutationReport {
  double inverse_residual;     // ||(1+X)(1-X0) - 1||
  double commutator_residual;  // ||X X0 - X0 X||
};
CommutationReport commutation_check(const SpectralSystem& s, double zeta);

struct PoleOptions {
  std::optional<double> shift;  // default 0.37 * rate_scale
  int max_attempts = 3;
  double dedupe_rtol = 1e-9;
};

/// Shift-invert pencil eigensolve on the traceless subspace:
/// theta eig of K = A(mu)^{-1} H1, pole zeta = mu + 1/theta.
PoleSet compute_poles(const SpectralSystem& s, GreenKind kind, PoleOptions opts = {});
PoleSet compute_poles(const LindbladModel& model, GreenKind kind, PoleOptions opts = {});

/// Rational expansion G(zeta) = G0 + sum_r (zeta - zeta_r)^{-1} G(r).
/// Residues fitted by least squares against direct solves at probe points.
struct RationalGreen {
  PoleSet poles;
  CMat constant_term;
  std::vector<CMat> residues;
  std::vector<double> fit_probes;

  CMat eval(double zeta) const;  // pole-proximity error near a pole
};

RationalGreen fit_rational(const SpectralSystem& s, GreenKind kind, const PoleSet& poles);

/// Subspace labelling: label[i] in {0, 1} for each coefficient index.
struct Grading {
  std::vector<uint8_t> label;
};

/// Throws naming the violated inclusion if the grading is not invariant.
void validate_grading(const SpectralSystem& s, const Grading& g);

struct ProjectedSteadyState {
  CVec rho0, rho1;  // components in Lambda(0), Lambda(1); full vectors, zero off-grade
};
ProjectedSteadyState projected_steady_state(const SpectralSystem& s, double zeta,
                                            const Grading& g);

struct AdiabaticResult {
  CMat generator0;              // A(0) - P G0 P restricted to Lambda(0)
  std::vector<Index> indices0;  // coefficient indices spanning Lambda(0)
  double min_eig_a1;            // min |eig A(1)|
  double p_norm;                // operator 2-norm of P
  double fast_ratio;            // min|eig A(1)| / ||P||
  double exchange_ratio;        // ||P|| / min|eig A(1)|
};
AdiabaticResult adiabatic_generator(const SpectralSystem& s, double zeta, const Grading& g);

}  // namespace specgf
