#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "specgf/types.hpp"

namespace specgf {

/// Operator on a finite Hilbert space. Carries optional Hermiticity and
/// trace expectations that are validated on construction.
class QOperator {
 public:
  enum class TraceClass { unconstrained, zero, one };

  QOperator() = default;

  explicit QOperator(CMat m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols())
      throw std::invalid_argument("QOperator: matrix must be square");
  }

  static QOperator hermitian(CMat m) {
    QOperator q(std::move(m));
    q.require_hermitian();
    return q;
  }

  static QOperator density(CMat m) {
    QOperator q(std::move(m));
    q.require_hermitian();
    q.require_trace(TraceClass::one);
    return q;
  }

  static QOperator identity(Index n) { return QOperator(CMat::Identity(n, n)); }
  static QOperator zero(Index n) { return QOperator(CMat::Zero(n, n)); }

  Index dim() const { return m_.rows(); }
  const CMat& mat() const { return m_; }
  CMat& mat() { return m_; }

  bool hermitian_flag() const { return hermitian_; }
  TraceClass trace_class() const { return trace_class_; }

  cx trace() const { return m_.trace(); }

  double hermiticity_defect() const {
    return (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  }

  void require_hermitian() {
    const double scale = m_.cwiseAbs().maxCoeff();
    if (scale > 0 && hermiticity_defect() > numeric_policy().hermiticity_rtol * scale)
      throw std::invalid_argument("QOperator: Hermiticity defect " +
                                  std::to_string(hermiticity_defect()));
    hermitian_ = true;
  }

  void require_trace(TraceClass tc) {
    const cx t = trace();
    const double want = (tc == TraceClass::one) ? 1.0 : 0.0;
    if (std::abs(t.imag()) > numeric_policy().trace_tol ||
        std::abs(t.real() - want) > numeric_policy().trace_tol)
      throw std::invalid_argument("QOperator: trace " + std::to_string(t.real()) +
                                  " violates declared class");
    trace_class_ = tc;
  }

 private:
  CMat m_;
  bool hermitian_ = false;
  TraceClass trace_class_ = TraceClass::unconstrained;
};

/// Column-stacking vectorization: vec(A rho B) = (B^T (x) A) vec(rho).
inline CVec vec_op(const CMat& a) {
  return Eigen::Map<const CVec>(a.data(), a.size());
}

inline CMat devec_op(const CVec& v) {
  const auto n = static_cast<Index>(std::llround(std::sqrt(double(v.size()))));
  if (n * n != v.size()) throw std::invalid_argument("devec_op: length is not a square");
  return Eigen::Map<const CMat>(v.data(), n, n);
}

/// Spin-1/2 operators in the basis {|e>, |g>} with Sz|e> = +1/2 |e>.
struct SpinHalf {
  CMat sz, sp, sm;
};

inline SpinHalf spin_half() {
  SpinHalf s;
  s.sz = CMat::Zero(2, 2);
  s.sz(0, 0) = 0.5;
  s.sz(1, 1) = -0.5;
  s.sp = CMat::Zero(2, 2);
  s.sp(0, 1) = 1.0;
  s.sm = s.sp.adjoint();
  return s;
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

}  // namespace specgf
