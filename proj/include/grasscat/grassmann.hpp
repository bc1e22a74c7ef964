#pragma once

#include "grasscat/core.hpp"
#include "grasscat/linalg.hpp"
#include "grasscat/rng.hpp"

namespace grasscat {

/// A point of Gr_k(F^m): a k-dimensional subspace held as an
/// orthonormal m-by-k frame. Frames are unique only up to a right
/// unitary factor, so subspaces are always compared through their
/// projection matrices.
template <typename Scalar>
struct GrPoint {
  Mat<Scalar> frame;

  Index ambient_dim() const { return frame.rows(); }
  Index sub_dim() const { return frame.cols(); }
  Mat<Scalar> projection() const { return proj_matrix(frame); }

  static GrPoint standard(Index m, Index k) {
    if (k > m) throw ShapeMismatch("standard subspace needs k <= m");
    GrPoint p;
    p.frame = Mat<Scalar>::Identity(m, m).leftCols(k);
    return p;
  }

  static GrPoint zero(Index m) { return standard(m, 0); }

  template <typename Derived>
  static GrPoint from_frame(const Eigen::MatrixBase<Derived>& q, const Tolerance& tol = {}) {
    if (!is_orthonormal(q, tol.eps_orth))
      throw NotOrthonormal("frame fails the orthonormality bound");
    return GrPoint{q};
  }

  template <typename Derived>
  static GrPoint from_span(const Eigen::MatrixBase<Derived>& span_cols,
                           const Tolerance& tol = {}) {
    return GrPoint{orthonormalize(span_cols, tol)};
  }
};

template <typename Scalar>
double projection_dist(const GrPoint<Scalar>& a, const GrPoint<Scalar>& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.sub_dim() != b.sub_dim()) return kInf;
  return mat_dist(a.projection(), b.projection());
}

template <typename Scalar>
bool same_subspace(const GrPoint<Scalar>& a, const GrPoint<Scalar>& b,
                   const Tolerance& tol = {}) {
  return projection_dist(a, b) <= tol.eps_eq;
}

template <typename Scalar>
GrPoint<Scalar> random_grpoint(Rng& rng, Index m, Index k, const Tolerance& tol = {}) {
  if (k == 0) return GrPoint<Scalar>::zero(m);
  for (int attempt = 0; attempt < 16; ++attempt) {
    Mat<Scalar> span = random_matrix<Scalar>(rng, m, k);
    if (smallest_singular_value(span) > 1e-3)
      return GrPoint<Scalar>::from_span(span, tol);
  }
  throw SamplerExhausted("could not draw a full-rank random frame");
}

/// Nearby subspace, useful for drawing well-conditioned chart bases.
template <typename Scalar>
GrPoint<Scalar> perturb_subspace(Rng& rng, const GrPoint<Scalar>& p, double scale,
                                 const Tolerance& tol = {}) {
  if (p.sub_dim() == 0) return p;
  Mat<Scalar> span = p.frame + scale * random_matrix<Scalar>(rng, p.ambient_dim(), p.sub_dim());
  return GrPoint<Scalar>::from_span(span, tol);
}

/// The chart phi_V at a base point: a chosen orthonormal basis of the
/// base subspace together with one of its complement. The chart sends
/// the coordinate matrix A to the subspace spanned by
/// basis_v + basis_vperp * A.
template <typename Scalar>
struct GrChart {
  GrPoint<Scalar> base;
  Mat<Scalar> basis_v;      // m x k
  Mat<Scalar> basis_vperp;  // m x (m-k)

  Index ambient_dim() const { return base.ambient_dim(); }
  Index sub_dim() const { return base.sub_dim(); }

  static GrChart at(const GrPoint<Scalar>& base, const Tolerance& tol = {}) {
    GrChart c;
    c.base = base;
    c.basis_v = base.frame;
    c.basis_vperp = orth_complement(base.frame, tol);
    return c;
  }

  static GrChart with_bases(const GrPoint<Scalar>& base, const Mat<Scalar>& v,
                            const Mat<Scalar>& vperp, const Tolerance& tol = {}) {
    const Index m = base.ambient_dim();
    if (v.rows() != m || vperp.rows() != m || v.cols() != base.sub_dim() ||
        v.cols() + vperp.cols() != m)
      throw ShapeMismatch("chart bases do not partition the ambient space");
    Mat<Scalar> u(m, m);
    u << v, vperp;
    if (!is_orthonormal(u, tol.eps_orth))
      throw NotOrthonormal("[basis_v | basis_vperp] must be unitary");
    if (mat_dist(proj_matrix(v), base.projection()) > tol.eps_eq)
      throw ShapeMismatch("basis_v does not span the chart base");
    GrChart c;
    c.base = base;
    c.basis_v = v;
    c.basis_vperp = vperp;
    return c;
  }
};

template <typename Scalar, typename Derived>
GrPoint<Scalar> chart_embed(const GrChart<Scalar>& chart, const Eigen::MatrixBase<Derived>& a,
                            const Tolerance& tol = {}) {
  if (a.rows() != chart.basis_vperp.cols() || a.cols() != chart.sub_dim())
    throw ShapeMismatch("chart coordinate must be (m-k) x k");
  Mat<Scalar> span = chart.basis_v + chart.basis_vperp * a.derived();
  return GrPoint<Scalar>::from_span(span, tol);
}

/// Inverse of chart_embed. The subspace lies in the chart domain iff
/// the projection of its frame onto the base is invertible.
template <typename Scalar>
Mat<Scalar> chart_coords(const GrChart<Scalar>& chart, const GrPoint<Scalar>& w,
                         const Tolerance& tol = {}) {
  if (w.ambient_dim() != chart.ambient_dim())
    throw ShapeMismatch("subspace lives in a different ambient space");
  if (w.sub_dim() != chart.sub_dim())
    throw ShapeMismatch("subspace dimension does not match the chart");
  Mat<Scalar> top = chart.basis_v.adjoint() * w.frame;       // k x k
  Mat<Scalar> bottom = chart.basis_vperp.adjoint() * w.frame;  // (m-k) x k
  if (smallest_singular_value(top) <= tol.eps_rank)
    throw OutsideChartDomain("subspace does not project onto the chart base");
  if (top.cols() == 0) return Mat<Scalar>(bottom.rows(), 0);
  return bottom * top.partialPivLu().inverse();
}

template <typename Scalar, typename Derived>
Mat<Scalar> chart_transition(const GrChart<Scalar>& from, const GrChart<Scalar>& to,
                             const Eigen::MatrixBase<Derived>& a, const Tolerance& tol = {}) {
  if (from.ambient_dim() != to.ambient_dim() || from.sub_dim() != to.sub_dim())
    throw ShapeMismatch("charts belong to different Grassmannians");
  return chart_coords(to, chart_embed(from, a, tol), tol);
}

/// Canonical inclusion F^m -> F^{m+pad}: zero rows appended to the frame.
template <typename Scalar>
GrPoint<Scalar> stabilize_gr(const GrPoint<Scalar>& p, Index pad = 1) {
  GrPoint<Scalar> out;
  out.frame = Mat<Scalar>::Zero(p.ambient_dim() + pad, p.sub_dim());
  out.frame.topRows(p.ambient_dim()) = p.frame;
  return out;
}

template <typename Scalar>
GrPoint<Scalar> pad_to(const GrPoint<Scalar>& p, Index ambient) {
  if (ambient < p.ambient_dim()) throw ShapeMismatch("cannot shrink the ambient space");
  return stabilize_gr(p, ambient - p.ambient_dim());
}

/// V |-> shift(V) + <e_1>: every frame vector moves down one slot and
/// e_1 is adjoined. Output dimension is always k+1 and the output
/// subspace contains e_1.
template <typename Scalar>
GrPoint<Scalar> iota_prime(const GrPoint<Scalar>& p) {
  const Index m = p.ambient_dim();
  const Index k = p.sub_dim();
  GrPoint<Scalar> out;
  out.frame = Mat<Scalar>::Zero(m + 1, k + 1);
  out.frame(0, 0) = Scalar(1);
  out.frame.block(1, 1, m, k) = p.frame;
  return out;
}

/// V |-> V + <e_{k+1} (x) e_1> inside F^{(k+1) * trunc}, with the
/// tensor grid flattened row-major: e_i (x) e_j |-> e_{(i-1)*trunc+j}.
/// Under this flattening re-indexing into the larger grid is a zero pad,
/// and the adjoined vector sits at flat index k*trunc+1.
template <typename Scalar>
GrPoint<Scalar> iota_g(const GrPoint<Scalar>& p, Index k, Index trunc) {
  if (p.sub_dim() != k) throw ShapeMismatch("subspace dimension must equal k");
  if (p.ambient_dim() != k * trunc)
    throw ShapeMismatch("ambient dimension must equal k*trunc");
  if (trunc < 1) throw ShapeMismatch("truncation must be positive");
  GrPoint<Scalar> out;
  out.frame = Mat<Scalar>::Zero((k + 1) * trunc, k + 1);
  out.frame.block(0, 0, k * trunc, k) = p.frame;
  out.frame(k * trunc, k) = Scalar(1);
  return out;
}

}  // namespace grasscat
