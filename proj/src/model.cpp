#include "specgf/model.hpp"

#include <cmath>
#include <sstream>

namespace specgf {

namespace {
double comm_norm(const CMat& a, const CMat& b) {
  return (a * b - b * a).norm();
}
}  // namespace

LindbladModel::LindbladModel(QOperator h0, QOperator h1, QOperator p,
                             std::vector<JumpTerm> jumps, QOperator rho_th, bool validate)
    : h0_(std::move(h0)), h1_(std::move(h1)), p_(std::move(p)),
      jumps_(std::move(jumps)), rho_th_(std::move(rho_th)) {
  const Index n = h1_.dim();
  if (h0_.dim() != n || p_.dim() != n || rho_th_.dim() != n)
    throw std::invalid_argument("LindbladModel: operator dimensions differ");
  for (const auto& j : jumps_) {
    if (j.op.dim() != n) throw std::invalid_argument("LindbladModel: jump dimension differs");
    if (j.rate < 0) throw std::invalid_argument("LindbladModel: negative jump rate");
  }
  if (!validate) return;
  h0_.require_hermitian();
  h1_.require_hermitian();
  p_.require_hermitian();
  rho_th_.require_hermitian();
  rho_th_.require_trace(QOperator::TraceClass::one);
  const auto rep = check_split(*this);
  if (!rep.pass) throw std::invalid_argument("LindbladModel: split validation failed: " + rep.detail);
}

SuperOperator LindbladModel::dissipator() const {
  SuperOperator d = SuperOperator::zero(dim());
  for (const auto& j : jumps_) {
    if (j.rate == 0.0) continue;
    d += lindblad_dissipator(j.op, j.rate);
  }
  return d;
}

SuperOperator LindbladModel::f0() const {
  return hamiltonian_superop(h0_, CommutatorSign::generator) + dissipator();
}

SuperOperator LindbladModel::p_superop() const {
  return hamiltonian_superop(p_, CommutatorSign::positive);
}

SuperOperator LindbladModel::h1_superop() const {
  return hamiltonian_superop(h1_, CommutatorSign::positive);
}

SuperOperator build_generator(const LindbladModel& model, double zeta) {
  return model.f0() - model.p_superop() - cx(zeta) * model.h1_superop();
}

SplitReport check_split(const LindbladModel& model) {
  SplitReport r{};
  const CMat& th = model.rho_th().mat();
  r.dissipator_on_thermal = model.dissipator().apply(th).norm();
  r.h0_commutant = comm_norm(model.h0().mat(), th);
  r.h1_commutant = comm_norm(model.h1().mat(), th);
  r.p_commutant = comm_norm(model.p().mat(), th);

  const auto& pol = numeric_policy();
  std::ostringstream why;
  r.pass = true;
  if (r.dissipator_on_thermal > pol.thermal_fixed_tol) {
    r.pass = false;
    why << "||D rho_th|| = " << r.dissipator_on_thermal << "; ";
  }
  if (r.h0_commutant > pol.commutant_tol) {
    r.pass = false;
    why << "||[H0, rho_th]|| = " << r.h0_commutant << "; ";
  }
  if (r.h1_commutant > pol.commutant_tol) {
    r.pass = false;
    why << "||[H1, rho_th]|| = " << r.h1_commutant << "; ";
  }
  if (r.p_commutant <= pol.commutant_tol) {
    r.pass = false;
    why << "[P, rho_th] vanishes (no driving); ";
  }
  r.detail = why.str();
  return r;
}

SpectralSystem make_system(const LindbladModel& model) {
  SpectralSystem s;
  s.dim = model.dim() * model.dim();
  s.f0 = model.f0().mat();
  s.p = model.p_superop().mat();
  s.h1 = model.h1_superop().mat();
  s.unit = vec_op(CMat::Identity(model.dim(), model.dim()));
  s.rho_th = vec_op(model.rho_th().mat());
  double scale = 0.0;
  for (const auto& j : model.jumps()) scale = std::max(scale, j.rate);
  scale = std::max(scale, model.p().mat().cwiseAbs().maxCoeff());
  s.rate_scale = scale > 0 ? scale : 1.0;
  return s;
}

}  // namespace specgf
