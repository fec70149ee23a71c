#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specgf/superop.hpp"

namespace specgf {

struct JumpTerm {
  QOperator op;   // dimensionless
  double rate;    // rad/s, zero allowed (term drops out)
};

/// Split generator data: H = P + H0 + zeta*H1 with [H0, rho_th] = [H1, rho_th] = 0,
/// [P, rho_th] != 0, and a dissipator that fixes rho_th.
class LindbladModel {
 public:
  LindbladModel(QOperator h0, QOperator h1, QOperator p, std::vector<JumpTerm> jumps,
                QOperator rho_th, bool validate = true);

  Index dim() const { return h1_.dim(); }
  const QOperator& h0() const { return h0_; }
  const QOperator& h1() const { return h1_; }
  const QOperator& p() const { return p_; }
  const std::vector<JumpTerm>& jumps() const { return jumps_; }
  const QOperator& rho_th() const { return rho_th_; }

  SuperOperator dissipator() const;
  SuperOperator f0() const;        // -i[H0,.] + D
  SuperOperator p_superop() const; // +i[P,.]
  SuperOperator h1_superop() const;// +i[H1,.]

 private:
  QOperator h0_, h1_, p_;
  std::vector<JumpTerm> jumps_;
  QOperator rho_th_;
};

/// M(zeta) = -i[P + H0 + zeta H1, .] + D = F0 - P_op - zeta H1_op.
SuperOperator build_generator(const LindbladModel& model, double zeta);

struct SplitReport {
  double dissipator_on_thermal;  // ||D rho_th||
  double h0_commutant;           // ||[H0, rho_th]||
  double h1_commutant;           // ||[H1, rho_th]||
  double p_commutant;            // ||[P, rho_th]||, must be nonzero
  bool pass;
  std::string detail;
};

SplitReport check_split(const LindbladModel& model);

/// Assembled pencil data the spectral solvers work on. Covers both the
/// Hilbert-space path (Liouville dimension = hilbert dim squared) and the
/// reduced coefficient path, which supplies its own trace functional.
struct SpectralSystem {
  Index dim = 0;
  SpMat f0, p, h1;
  CVec unit;        // coefficients of the identity operator; also the trace functional
  CVec rho_th;
  double rate_scale = 1.0;  // characteristic rate used for default shifts

  SpMat pencil(double zeta, bool driven) const {
    SpMat a = f0;
    if (driven) a -= p;
    if (zeta != 0.0) a -= SpMat(cx(zeta) * h1);
    return a;
  }
};

SpectralSystem make_system(const LindbladModel& model);

}  // namespace specgf
