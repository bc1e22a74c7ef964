#pragma once

#include "grasscat/core.hpp"

namespace grasscat {

/// P = Q Q^H for an orthonormal frame Q. Hermitian, idempotent,
/// trace equal to the column count.
template <typename Derived>
Mat<typename Derived::Scalar> proj_matrix(const Eigen::MatrixBase<Derived>& frame) {
  return frame.derived() * frame.derived().adjoint();
}

/// Orthonormal basis of the column span, via Householder QR.
/// The input must have full column rank.
template <typename Derived>
Mat<typename Derived::Scalar> orthonormalize(const Eigen::MatrixBase<Derived>& frame_in,
                                             const Tolerance& tol = {}) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> frame = frame_in;
  const Index m = frame.rows();
  const Index k = frame.cols();
  if (k == 0) return Mat<Scalar>(m, 0);
  if (k > m) throw RankDeficient("frame has more columns than rows");
  if (smallest_singular_value(frame) <= tol.eps_rank)
    throw RankDeficient("frame is numerically rank deficient");
  Eigen::HouseholderQR<Mat<Scalar>> qr(frame);
  Mat<Scalar> q = qr.householderQ() * Mat<Scalar>::Identity(m, k);
  return q;
}

/// Orthonormal basis of the orthogonal complement of an orthonormal
/// frame. Stacking [frame | complement] gives a unitary matrix.
template <typename Derived>
Mat<typename Derived::Scalar> orth_complement(const Eigen::MatrixBase<Derived>& frame_in,
                                              const Tolerance& tol = {}) {
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> frame = frame_in;
  const Index m = frame.rows();
  const Index k = frame.cols();
  if (!is_orthonormal(frame, tol.eps_orth))
    throw NotOrthonormal("orth_complement expects an orthonormal frame");
  if (k == 0) return Mat<Scalar>::Identity(m, m);
  if (k == m) return Mat<Scalar>(m, 0);
  Eigen::HouseholderQR<Mat<Scalar>> qr(frame);
  Mat<Scalar> full = qr.householderQ() * Mat<Scalar>::Identity(m, m);
  return full.rightCols(m - k);
}

}  // namespace grasscat
