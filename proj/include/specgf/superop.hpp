#pragma once

#include <vector>

#include "specgf/qoperator.hpp"

namespace specgf {

/// Linear map on vectorized operators (column-stacking convention).
/// Stored sparse; Liouville dimension is the square of the Hilbert one.
class SuperOperator {
 public:
  SuperOperator() = default;
  SuperOperator(Index hilbert_dim, SpMat m) : hdim_(hilbert_dim), m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() != hdim_ * hdim_)
      throw std::invalid_argument("SuperOperator: dimension mismatch");
  }

  static SuperOperator zero(Index hilbert_dim) {
    return SuperOperator(hilbert_dim, SpMat(hilbert_dim * hilbert_dim, hilbert_dim * hilbert_dim));
  }

  Index hilbert_dim() const { return hdim_; }
  Index dim() const { return m_.rows(); }
  const SpMat& mat() const { return m_; }
  CMat dense() const { return CMat(m_); }

  CMat apply(const CMat& rho) const {
    if (rho.rows() != hdim_) throw std::invalid_argument("SuperOperator::apply: shape error");
    return devec_op(m_ * vec_op(rho));
  }

  SuperOperator& operator+=(const SuperOperator& o) {
    m_ += o.m_;
    return *this;
  }
  friend SuperOperator operator+(SuperOperator a, const SuperOperator& b) { return a += b; }
  friend SuperOperator operator-(const SuperOperator& a, const SuperOperator& b) {
    return SuperOperator(a.hdim_, a.m_ - b.m_);
  }
  friend SuperOperator operator*(cx s, const SuperOperator& a) {
    return SuperOperator(a.hdim_, s * a.m_);
  }

 private:
  Index hdim_ = 0;
  SpMat m_;
};

/// rate * [ (conj X (x) X) - 1/2 (1 (x) X^dag X) - 1/2 ((X^dag X)^T (x) 1) ].
/// Applied to Hermitian rho the result is Hermitian and traceless.
SuperOperator lindblad_dissipator(const QOperator& X, double rate);

enum class CommutatorSign {
  generator,  // -i[H, .]
  positive    // +i[H, .]
};

SuperOperator hamiltonian_superop(const QOperator& H, CommutatorSign sign);

/// Sparse Kronecker product helper shared by the builders.
SpMat sparse_kron(const CMat& a, const CMat& b);

}  // namespace specgf
