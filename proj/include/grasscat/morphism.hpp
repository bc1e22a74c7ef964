#pragma once

#include "grasscat/core.hpp"
#include "grasscat/grassmann.hpp"

namespace grasscat {

/// A point of the morphism bundle Mor_{k,l}^{m,n}: a linear map from a
/// subspace of F^m to a subspace of F^n. The map is stored as the
/// ambient n-by-m matrix that annihilates src-perp and lands inside
/// dst; this makes equality and composition chart-free.
template <typename Scalar>
struct MorPoint {
  GrPoint<Scalar> src;
  GrPoint<Scalar> dst;
  Mat<Scalar> map_mat;  // dst ambient x src ambient
};

/// Builds a MorPoint from the matrix of the map in the two frames:
/// coeff is dst.sub_dim() x src.sub_dim().
template <typename Scalar, typename Derived>
MorPoint<Scalar> mor_from_coeff(const GrPoint<Scalar>& src, const GrPoint<Scalar>& dst,
                                const Eigen::MatrixBase<Derived>& coeff) {
  if (coeff.rows() != dst.sub_dim() || coeff.cols() != src.sub_dim())
    throw ShapeMismatch("coefficient matrix does not match the fibers");
  return MorPoint<Scalar>{src, dst, dst.frame * coeff.derived() * src.frame.adjoint()};
}

/// Validates the two projection identities map*P_src = map and
/// P_dst*map = map before accepting an ambient matrix.
template <typename Scalar>
MorPoint<Scalar> mor_from_ambient(const GrPoint<Scalar>& src, const GrPoint<Scalar>& dst,
                                  const Mat<Scalar>& map, const Tolerance& tol = {}) {
  if (map.rows() != dst.ambient_dim() || map.cols() != src.ambient_dim())
    throw ShapeMismatch("ambient matrix has the wrong shape");
  if (mat_dist(map * src.projection(), map) > tol.eps_eq)
    throw ShapeMismatch("map does not annihilate the source complement");
  if (mat_dist(dst.projection() * map, map) > tol.eps_eq)
    throw ShapeMismatch("map does not land inside the target");
  return MorPoint<Scalar>{src, dst, map};
}

template <typename Scalar>
const GrPoint<Scalar>& mor_source(const MorPoint<Scalar>& f) { return f.src; }

template <typename Scalar>
const GrPoint<Scalar>& mor_target(const MorPoint<Scalar>& f) { return f.dst; }

template <typename Scalar>
MorPoint<Scalar> mor_identity(const GrPoint<Scalar>& v) {
  return MorPoint<Scalar>{v, v, v.projection()};
}

template <typename Scalar>
MorPoint<Scalar> zero_mor(const GrPoint<Scalar>& src_ambient_of,
                          const GrPoint<Scalar>& dst_ambient_of) {
  GrPoint<Scalar> s = GrPoint<Scalar>::zero(src_ambient_of.ambient_dim());
  GrPoint<Scalar> d = GrPoint<Scalar>::zero(dst_ambient_of.ambient_dim());
  return MorPoint<Scalar>{s, d, Mat<Scalar>::Zero(d.ambient_dim(), s.ambient_dim())};
}

template <typename Scalar>
double mor_dist(const MorPoint<Scalar>& a, const MorPoint<Scalar>& b) {
  const double ds = projection_dist(a.src, b.src);
  const double dt = projection_dist(a.dst, b.dst);
  const double dm = mat_dist(a.map_mat, b.map_mat);
  return std::max({ds, dt, dm});
}

/// g after f. The targets must agree as subspaces; no snapping is done.
template <typename Scalar>
MorPoint<Scalar> mor_compose(const MorPoint<Scalar>& f, const MorPoint<Scalar>& g,
                             const Tolerance& tol = {}) {
  if (projection_dist(f.dst, g.src) > tol.eps_eq)
    throw NotComposable("target of the first factor differs from the source of the second");
  return MorPoint<Scalar>{f.src, g.dst, g.map_mat * f.map_mat};
}

/// Chart coordinates (A_X, B_Y, [T]) of a morphism at a base pair.
/// [T] realizes the map in the bases x = x0 + x0perp*A_X and
/// y = y0 + y0perp*B_Y, which are in general not orthonormal.
template <typename Scalar>
struct ChartTriple {
  Mat<Scalar> a_src;  // (m-k) x k
  Mat<Scalar> b_dst;  // (n-l) x l
  Mat<Scalar> t_box;  // l x k
};

template <typename Scalar>
double triple_dist(const ChartTriple<Scalar>& a, const ChartTriple<Scalar>& b) {
  return std::max({mat_dist(a.a_src, b.a_src), mat_dist(a.b_dst, b.b_dst),
                   mat_dist(a.t_box, b.t_box)});
}

template <typename Scalar>
ChartTriple<Scalar> mor_chart(const MorPoint<Scalar>& f, const GrChart<Scalar>& base_src,
                              const GrChart<Scalar>& base_dst, const Tolerance& tol = {}) {
  ChartTriple<Scalar> t;
  t.a_src = chart_coords(base_src, f.src, tol);
  t.b_dst = chart_coords(base_dst, f.dst, tol);
  Mat<Scalar> xb = base_src.basis_v + base_src.basis_vperp * t.a_src;
  Mat<Scalar> yb = base_dst.basis_v + base_dst.basis_vperp * t.b_dst;
  if (yb.cols() == 0) {
    t.t_box = Mat<Scalar>(0, xb.cols());
  } else {
    // solve yb * [T] = map * xb; the right side lies in span(yb)
    t.t_box = yb.completeOrthogonalDecomposition().solve(f.map_mat * xb);
  }
  return t;
}

template <typename Scalar>
MorPoint<Scalar> mor_unchart(const ChartTriple<Scalar>& t, const GrChart<Scalar>& base_src,
                             const GrChart<Scalar>& base_dst, const Tolerance& tol = {}) {
  if (t.a_src.rows() != base_src.basis_vperp.cols() || t.a_src.cols() != base_src.sub_dim() ||
      t.b_dst.rows() != base_dst.basis_vperp.cols() || t.b_dst.cols() != base_dst.sub_dim() ||
      t.t_box.rows() != base_dst.sub_dim() || t.t_box.cols() != base_src.sub_dim())
    throw ShapeMismatch("chart triple does not match the base charts");
  Mat<Scalar> xb = base_src.basis_v + base_src.basis_vperp * t.a_src;
  Mat<Scalar> yb = base_dst.basis_v + base_dst.basis_vperp * t.b_dst;
  GrPoint<Scalar> src = GrPoint<Scalar>::from_span(xb, tol);
  GrPoint<Scalar> dst = GrPoint<Scalar>::from_span(yb, tol);
  if (xb.cols() == 0 || yb.cols() == 0)
    return MorPoint<Scalar>{
        src, dst, Mat<Scalar>::Zero(base_dst.ambient_dim(), base_src.ambient_dim())};
  Mat<Scalar> pinv = xb.completeOrthogonalDecomposition().pseudoInverse();
  return MorPoint<Scalar>{src, dst, yb * t.t_box * pinv};
}

/// Zero-pads the two ambient spaces. Chart data at padded bases is
/// unchanged.
template <typename Scalar>
MorPoint<Scalar> mor_stabilize(const MorPoint<Scalar>& f, Index pad_src, Index pad_dst) {
  MorPoint<Scalar> out;
  out.src = stabilize_gr(f.src, pad_src);
  out.dst = stabilize_gr(f.dst, pad_dst);
  out.map_mat = Mat<Scalar>::Zero(f.map_mat.rows() + pad_dst, f.map_mat.cols() + pad_src);
  out.map_mat.topLeftCorner(f.map_mat.rows(), f.map_mat.cols()) = f.map_mat;
  return out;
}

template <typename Scalar>
MorPoint<Scalar> mor_pad_to(const MorPoint<Scalar>& f, Index src_ambient, Index dst_ambient) {
  if (src_ambient < f.src.ambient_dim() || dst_ambient < f.dst.ambient_dim())
    throw ShapeMismatch("cannot shrink an ambient space");
  return mor_stabilize(f, src_ambient - f.src.ambient_dim(),
                       dst_ambient - f.dst.ambient_dim());
}

/// True iff the fibers have equal dimension and the map restricted to
/// them is invertible. Chart-independent: re-charting multiplies [T]
/// by invertible factors only.
template <typename Scalar>
bool is_iso(const MorPoint<Scalar>& f, const Tolerance& tol = {}) {
  if (f.src.sub_dim() != f.dst.sub_dim()) return false;
  Mat<Scalar> t = f.dst.frame.adjoint() * f.map_mat * f.src.frame;
  return smallest_singular_value(t) > tol.eps_rank;
}

// ---------------------------------------------------------------------------
// The matrix category: objects are the dimensions, morphisms are
// matrices. A VfMor with an r x c matrix is a map F^c -> F^r.

template <typename Scalar>
struct VfMor {
  Mat<Scalar> mat;

  Index source_dim() const { return mat.cols(); }
  Index target_dim() const { return mat.rows(); }
};

template <typename Scalar>
VfMor<Scalar> vf_identity(Index n) {
  return VfMor<Scalar>{Mat<Scalar>::Identity(n, n)};
}

template <typename Scalar>
VfMor<Scalar> vf_compose(const VfMor<Scalar>& f, const VfMor<Scalar>& g) {
  if (g.source_dim() != f.target_dim())
    throw NotComposable("matrix shapes are not composable");
  return VfMor<Scalar>{g.mat * f.mat};
}

template <typename Scalar>
double vf_dist(const VfMor<Scalar>& a, const VfMor<Scalar>& b) {
  return mat_dist(a.mat, b.mat);
}

/// Realizes a matrix as a morphism between the standard coordinate
/// subspaces span(e_1..e_n) of the chosen ambient spaces.
template <typename Scalar>
MorPoint<Scalar> embed_vf(const VfMor<Scalar>& f, Index ambient_src, Index ambient_dst) {
  if (ambient_src < f.source_dim() || ambient_dst < f.target_dim())
    throw ShapeMismatch("ambient dimensions are too small for the matrix");
  MorPoint<Scalar> out;
  out.src = GrPoint<Scalar>::standard(ambient_src, f.source_dim());
  out.dst = GrPoint<Scalar>::standard(ambient_dst, f.target_dim());
  out.map_mat = Mat<Scalar>::Zero(ambient_dst, ambient_src);
  out.map_mat.topLeftCorner(f.target_dim(), f.source_dim()) = f.mat;
  return out;
}

/// The groupoid G has only identities; its inclusion sends a subspace
/// to the identity morphism on it.
template <typename Scalar>
MorPoint<Scalar> embed_g(const GrPoint<Scalar>& v) {
  return mor_identity(v);
}

template <typename Scalar>
MorPoint<Scalar> random_morpoint(Rng& rng, const GrPoint<Scalar>& src, Index dst_ambient,
                                 Index dst_dim, const Tolerance& tol = {}) {
  GrPoint<Scalar> dst = random_grpoint<Scalar>(rng, dst_ambient, dst_dim, tol);
  Mat<Scalar> coeff = random_matrix<Scalar>(rng, dst_dim, src.sub_dim());
  return mor_from_coeff(src, dst, coeff);
}

template <typename Scalar>
MorPoint<Scalar> random_iso_morpoint(Rng& rng, const GrPoint<Scalar>& src, Index dst_ambient,
                                     const Tolerance& tol = {}) {
  if (dst_ambient < src.sub_dim())
    throw ShapeMismatch("target ambient space cannot hold the fiber");
  GrPoint<Scalar> dst = random_grpoint<Scalar>(rng, dst_ambient, src.sub_dim(), tol);
  Mat<Scalar> coeff = random_invertible<Scalar>(rng, src.sub_dim());
  return mor_from_coeff(src, dst, coeff);
}

}  // namespace grasscat
