#include "specgf/superop.hpp"

namespace specgf {

NumericPolicy& numeric_policy() {
  static NumericPolicy policy;
  return policy;
}

SpMat sparse_kron(const CMat& a, const CMat& b) {
  std::vector<Eigen::Triplet<cx>> trip;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      const cx av = a(i, j);
      if (av == cx(0)) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) {
          const cx bv = b(k, l);
          if (bv == cx(0)) continue;
          trip.emplace_back(i * b.rows() + k, j * b.cols() + l, av * bv);
        }
    }
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

SuperOperator lindblad_dissipator(const QOperator& X, double rate) {
  if (rate < 0) throw std::invalid_argument("lindblad_dissipator: negative rate");
  const Index n = X.dim();
  const CMat id = CMat::Identity(n, n);
  const CMat xdx = X.mat().adjoint() * X.mat();
  SpMat m = sparse_kron(X.mat().conjugate(), X.mat());
  m -= 0.5 * sparse_kron(id, xdx);
  m -= 0.5 * sparse_kron(xdx.transpose(), id);
  return SuperOperator(n, SpMat(rate * m));
}

SuperOperator hamiltonian_superop(const QOperator& H, CommutatorSign sign) {
  const double scale = H.mat().cwiseAbs().maxCoeff();
  if (scale > 0 && H.hermiticity_defect() > numeric_policy().hermiticity_rtol * scale)
    throw std::invalid_argument("hamiltonian_superop: H is not Hermitian");
  const Index n = H.dim();
  const CMat id = CMat::Identity(n, n);
  const cx s = (sign == CommutatorSign::generator) ? -iu : iu;
  SpMat m = sparse_kron(id, H.mat());
  m -= sparse_kron(H.mat().transpose(), id);
  return SuperOperator(n, SpMat(s * m));
}

}  // namespace specgf
