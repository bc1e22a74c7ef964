#pragma once

#include "grasscat/core.hpp"
#include "grasscat/grassmann.hpp"
#include "grasscat/morphism.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <vector>

namespace grasscat {

// ---------------------------------------------------------------------------
// The fixed basis isomorphisms theta : F^n + F^n -> F^{2n} and
// kappa : F^n (x) F^n -> F^{n^2}. Permutations are stored 0-based as
// perm[p] = q, meaning input slot p lands in output slot q.

/// Interleaving: (e_i, 0) |-> e_{2i-1}, (0, e_i) |-> e_{2i} (1-based).
inline std::vector<Index> theta_perm(Index n) {
  std::vector<Index> p(static_cast<std::size_t>(2 * n));
  for (Index i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = 2 * i;
    p[static_cast<std::size_t>(n + i)] = 2 * i + 1;
  }
  return p;
}

/// Snake ordering: for the layer n' = max(i, j),
/// e_i (x) e_{n'} |-> e_{i + (n'-1)^2} and
/// e_{n'} (x) e_j |-> e_{2n' - j + (n'-1)^2} (1-based; the two rules
/// agree at i = j = n'). Input slots are row-major:
/// e_i (x) e_j at slot (i-1)*n + j. The layer formula does not involve
/// n, which is what makes the ordering stable under padding.
inline std::vector<Index> kappa_perm(Index n) {
  std::vector<Index> p(static_cast<std::size_t>(n * n));
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const Index layer = std::max(i, j);
      const Index shell = (layer - 1) * (layer - 1);
      const Index out1 = (j == layer) ? i + shell : 2 * layer - j + shell;
      p[static_cast<std::size_t>((i - 1) * n + (j - 1))] = out1 - 1;
    }
  }
  return p;
}

inline bool is_permutation(const std::vector<Index>& p) {
  std::vector<bool> seen(p.size(), false);
  for (Index q : p) {
    if (q < 0 || q >= static_cast<Index>(p.size()) || seen[static_cast<std::size_t>(q)])
      return false;
    seen[static_cast<std::size_t>(q)] = true;
  }
  return true;
}

template <typename Scalar>
Mat<Scalar> perm_to_matrix(const std::vector<Index>& p) {
  const Index n = static_cast<Index>(p.size());
  Mat<Scalar> m = Mat<Scalar>::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(p[static_cast<std::size_t>(i)], i) = Scalar(1);
  return m;
}

/// Row r of the input lands in row perm[r]; entries move, no arithmetic.
template <typename Scalar>
Mat<Scalar> apply_perm_rows(const std::vector<Index>& perm, const Mat<Scalar>& a) {
  if (static_cast<Index>(perm.size()) != a.rows())
    throw ShapeMismatch("permutation length does not match the row count");
  Mat<Scalar> out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r) out.row(perm[static_cast<std::size_t>(r)]) = a.row(r);
  return out;
}

/// out(row_perm[r], col_perm[c]) = a(r, c).
template <typename Scalar>
Mat<Scalar> apply_perm_both(const std::vector<Index>& row_perm,
                            const std::vector<Index>& col_perm, const Mat<Scalar>& a) {
  if (static_cast<Index>(row_perm.size()) != a.rows() ||
      static_cast<Index>(col_perm.size()) != a.cols())
    throw ShapeMismatch("permutation lengths do not match the matrix");
  Mat<Scalar> out(a.rows(), a.cols());
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c)
      out(row_perm[static_cast<std::size_t>(r)], col_perm[static_cast<std::size_t>(c)]) = a(r, c);
  return out;
}

template <typename Scalar>
Vec<Scalar> theta_apply(Index n, const Vec<Scalar>& v) {
  if (v.size() != 2 * n) throw ShapeMismatch("theta expects a vector of length 2n");
  const auto perm = theta_perm(n);
  Vec<Scalar> out(2 * n);
  for (Index i = 0; i < 2 * n; ++i) out(perm[static_cast<std::size_t>(i)]) = v(i);
  return out;
}

template <typename Scalar>
Vec<Scalar> kappa_apply(Index n, const Vec<Scalar>& v) {
  if (v.size() != n * n) throw ShapeMismatch("kappa expects a vector of length n^2");
  const auto perm = kappa_perm(n);
  Vec<Scalar> out(n * n);
  for (Index i = 0; i < n * n; ++i) out(perm[static_cast<std::size_t>(i)]) = v(i);
  return out;
}

template <typename Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.size() == 0 || b.size() == 0) return Mat<Scalar>(a.rows() * b.rows(), a.cols() * b.cols());
  Mat<Scalar> out = Eigen::kroneckerProduct(a, b);
  return out;
}

// ---------------------------------------------------------------------------
// Direct sum and tensor product on points and morphisms of the
// truncated fat category. Both change the ambient dimension
// (n -> 2n and n -> n^2); the *_padded variants first pad the inputs
// to a common ambient dimension.

template <typename Scalar>
GrPoint<Scalar> oplus_points(const GrPoint<Scalar>& x, const GrPoint<Scalar>& y) {
  const Index n = x.ambient_dim();
  if (y.ambient_dim() != n)
    throw AmbientMismatch("direct sum needs equal ambient dimensions");
  GrPoint<Scalar> out;
  out.frame = Mat<Scalar>::Zero(2 * n, x.sub_dim() + y.sub_dim());
  for (Index r = 0; r < n; ++r) {
    out.frame.row(2 * r).head(x.sub_dim()) = x.frame.row(r);
    out.frame.row(2 * r + 1).tail(y.sub_dim()) = y.frame.row(r);
  }
  return out;
}

template <typename Scalar>
MorPoint<Scalar> oplus_mor(const MorPoint<Scalar>& f, const MorPoint<Scalar>& g) {
  const Index m = f.src.ambient_dim();
  const Index n = f.dst.ambient_dim();
  if (g.src.ambient_dim() != m || g.dst.ambient_dim() != n)
    throw AmbientMismatch("direct sum needs pairwise equal ambient dimensions");
  MorPoint<Scalar> out;
  out.src = oplus_points(f.src, g.src);
  out.dst = oplus_points(f.dst, g.dst);
  out.map_mat = Mat<Scalar>::Zero(2 * n, 2 * m);
  for (Index r = 0; r < n; ++r)
    for (Index c = 0; c < m; ++c) {
      out.map_mat(2 * r, 2 * c) = f.map_mat(r, c);
      out.map_mat(2 * r + 1, 2 * c + 1) = g.map_mat(r, c);
    }
  return out;
}

template <typename Scalar>
GrPoint<Scalar> otimes_points(const GrPoint<Scalar>& x, const GrPoint<Scalar>& y) {
  const Index n = x.ambient_dim();
  if (y.ambient_dim() != n)
    throw AmbientMismatch("tensor product needs equal ambient dimensions");
  GrPoint<Scalar> out;
  out.frame = apply_perm_rows(kappa_perm(n), kron(x.frame, y.frame));
  return out;
}

template <typename Scalar>
MorPoint<Scalar> otimes_mor(const MorPoint<Scalar>& f, const MorPoint<Scalar>& g) {
  const Index m = f.src.ambient_dim();
  const Index n = f.dst.ambient_dim();
  if (g.src.ambient_dim() != m || g.dst.ambient_dim() != n)
    throw AmbientMismatch("tensor product needs pairwise equal ambient dimensions");
  MorPoint<Scalar> out;
  out.src = otimes_points(f.src, g.src);
  out.dst = otimes_points(f.dst, g.dst);
  out.map_mat = apply_perm_both(kappa_perm(n), kappa_perm(m), kron(f.map_mat, g.map_mat));
  return out;
}

template <typename Scalar>
GrPoint<Scalar> oplus_points_padded(const GrPoint<Scalar>& x, const GrPoint<Scalar>& y) {
  const Index n = std::max(x.ambient_dim(), y.ambient_dim());
  return oplus_points(pad_to(x, n), pad_to(y, n));
}

template <typename Scalar>
MorPoint<Scalar> oplus_mor_padded(const MorPoint<Scalar>& f, const MorPoint<Scalar>& g) {
  const Index m = std::max(f.src.ambient_dim(), g.src.ambient_dim());
  const Index n = std::max(f.dst.ambient_dim(), g.dst.ambient_dim());
  return oplus_mor(mor_pad_to(f, m, n), mor_pad_to(g, m, n));
}

template <typename Scalar>
GrPoint<Scalar> otimes_points_padded(const GrPoint<Scalar>& x, const GrPoint<Scalar>& y) {
  const Index n = std::max(x.ambient_dim(), y.ambient_dim());
  return otimes_points(pad_to(x, n), pad_to(y, n));
}

template <typename Scalar>
MorPoint<Scalar> otimes_mor_padded(const MorPoint<Scalar>& f, const MorPoint<Scalar>& g) {
  const Index m = std::max(f.src.ambient_dim(), g.src.ambient_dim());
  const Index n = std::max(f.dst.ambient_dim(), g.dst.ambient_dim());
  return otimes_mor(mor_pad_to(f, m, n), mor_pad_to(g, m, n));
}

// Matrix category: block-diagonal sum and Kronecker product, with the
// concatenated basis f_k = (e_k, 0) / (0, e_{k-n}) for the sum and the
// row-major basis f_{(i-1)m+j} = e_i (x) e_j for the product. On
// objects these are strictly associative and unital.

template <typename Scalar>
VfMor<Scalar> vf_oplus(const VfMor<Scalar>& a, const VfMor<Scalar>& b) {
  Mat<Scalar> m = Mat<Scalar>::Zero(a.target_dim() + b.target_dim(),
                                    a.source_dim() + b.source_dim());
  m.topLeftCorner(a.target_dim(), a.source_dim()) = a.mat;
  m.bottomRightCorner(b.target_dim(), b.source_dim()) = b.mat;
  return VfMor<Scalar>{m};
}

template <typename Scalar>
VfMor<Scalar> vf_otimes(const VfMor<Scalar>& a, const VfMor<Scalar>& b) {
  return VfMor<Scalar>{kron(a.mat, b.mat)};
}

// ---------------------------------------------------------------------------
// Explicit natural-transformation witnesses.

/// The identity of X, viewed as an isomorphism from the stabilized
/// image of X in F^{2n} to theta(0 + X) (or theta(X + 0) when
/// zero_first is false).
template <typename Scalar>
MorPoint<Scalar> witness_add_unit(const GrPoint<Scalar>& x, bool zero_first = true) {
  const Index m = x.ambient_dim();
  GrPoint<Scalar> padded = pad_to(x, 2 * m);
  GrPoint<Scalar> zero = GrPoint<Scalar>::zero(m);
  GrPoint<Scalar> image = zero_first ? oplus_points(zero, x) : oplus_points(x, zero);
  return MorPoint<Scalar>{padded, image, image.frame * padded.frame.adjoint()};
}

/// The block swap from theta(X + Y) to theta(Y + X); at aligned charts
/// its matrix is [0, id / id, 0].
template <typename Scalar>
MorPoint<Scalar> witness_comm(const GrPoint<Scalar>& x, const GrPoint<Scalar>& y) {
  if (x.ambient_dim() != y.ambient_dim())
    throw AmbientMismatch("swap witness needs equal ambient dimensions");
  GrPoint<Scalar> src = oplus_points(x, y);
  GrPoint<Scalar> dst = oplus_points(y, x);
  const Index k = x.sub_dim();
  const Index k2 = y.sub_dim();
  // source column a is x_a, which the flip sends to dst column k2+a;
  // source column k+b is y_b, sent to dst column b
  Mat<Scalar> reordered(dst.frame.rows(), k + k2);
  reordered << dst.frame.rightCols(k), dst.frame.leftCols(k2);
  return MorPoint<Scalar>{src, dst, reordered * src.frame.adjoint()};
}

/// Left distributivity F^m (x) (F^n + F^k) -> (F^m (x) F^n) + (F^m (x) F^k):
/// the interleaved (n,k)-blocks are sorted into an n-block followed by a
/// k-block, m times.
template <typename Scalar>
VfMor<Scalar> witness_distrib_left(Index m, Index n, Index k) {
  const Index d = m * (n + k);
  Mat<Scalar> p = Mat<Scalar>::Zero(d, d);
  for (Index a = 0; a < m; ++a) {
    for (Index c = 0; c < n; ++c) p(a * n + c, a * (n + k) + c) = Scalar(1);
    for (Index c = 0; c < k; ++c) p(m * n + a * k + c, a * (n + k) + n + c) = Scalar(1);
  }
  return VfMor<Scalar>{p};
}

/// Right distributivity (F^m + F^n) (x) F^k -> (F^m (x) F^k) + (F^n (x) F^k)
/// is the identity under the fixed basis conventions.
template <typename Scalar>
VfMor<Scalar> witness_distrib_right(Index m, Index n, Index k) {
  return vf_identity<Scalar>((m + n) * k);
}

/// F^n + F^m -> F^m + F^n on concatenated coordinates.
template <typename Scalar>
VfMor<Scalar> witness_swap_vf(Index n, Index m) {
  Mat<Scalar> p = Mat<Scalar>::Zero(m + n, n + m);
  for (Index i = 0; i < m; ++i) p(i, n + i) = Scalar(1);
  for (Index i = 0; i < n; ++i) p(m + i, i) = Scalar(1);
  return VfMor<Scalar>{p};
}

/// Comparison of the two sums: the isomorphism from the standard
/// embedding of F^{k+l} in F^{2*trunc} to theta(F^k + F^l), matching
/// concatenated with interleaved coordinates.
template <typename Scalar>
MorPoint<Scalar> comparison_oplus_component(Index k, Index l, Index trunc) {
  if (k > trunc || l > trunc) throw ShapeMismatch("truncation too small");
  GrPoint<Scalar> src = GrPoint<Scalar>::standard(2 * trunc, k + l);
  GrPoint<Scalar> dst =
      oplus_points(GrPoint<Scalar>::standard(trunc, k), GrPoint<Scalar>::standard(trunc, l));
  return MorPoint<Scalar>{src, dst, dst.frame * src.frame.adjoint()};
}

/// Comparison of the two products: from the standard embedding of
/// F^{kl} in F^{trunc^2} to kappa(F^k (x) F^l).
template <typename Scalar>
MorPoint<Scalar> comparison_otimes_component(Index k, Index l, Index trunc) {
  if (k > trunc || l > trunc) throw ShapeMismatch("truncation too small");
  GrPoint<Scalar> src = GrPoint<Scalar>::standard(trunc * trunc, k * l);
  GrPoint<Scalar> dst =
      otimes_points(GrPoint<Scalar>::standard(trunc, k), GrPoint<Scalar>::standard(trunc, l));
  return MorPoint<Scalar>{src, dst, dst.frame * src.frame.adjoint()};
}

/// Product chart at theta(X0 + Y0) whose bases are ordered so that
/// chart coordinates of theta(X + Y) read blockdiag(A_X, B_Y).
template <typename Scalar>
GrChart<Scalar> oplus_chart(const GrChart<Scalar>& cx, const GrChart<Scalar>& cy,
                            const Tolerance& tol = {}) {
  GrPoint<Scalar> base = oplus_points(cx.base, cy.base);
  GrPoint<Scalar> v = oplus_points(GrPoint<Scalar>{cx.basis_v}, GrPoint<Scalar>{cy.basis_v});
  GrPoint<Scalar> vp =
      oplus_points(GrPoint<Scalar>{cx.basis_vperp}, GrPoint<Scalar>{cy.basis_vperp});
  return GrChart<Scalar>::with_bases(base, v.frame, vp.frame, tol);
}

/// Product chart at kappa(X0 (x) Y0). The complement is ordered as
/// [x0perp (x) y0, x0 (x) y0perp, x0perp (x) y0perp] so that the chart
/// coordinates of kappa(X (x) Y) stack as
/// [A_X (x) id / id (x) A_Y / A_X (x) A_Y].
template <typename Scalar>
GrChart<Scalar> otimes_chart(const GrChart<Scalar>& cx, const GrChart<Scalar>& cy,
                             const Tolerance& tol = {}) {
  const Index n = cx.ambient_dim();
  if (cy.ambient_dim() != n)
    throw AmbientMismatch("tensor chart needs equal ambient dimensions");
  const auto perm = kappa_perm(n);
  GrPoint<Scalar> base = otimes_points(cx.base, cy.base);
  Mat<Scalar> v = apply_perm_rows(perm, kron(cx.basis_v, cy.basis_v));
  Mat<Scalar> vp(n * n, n * n - cx.sub_dim() * cy.sub_dim());
  vp << apply_perm_rows(perm, kron(cx.basis_vperp, cy.basis_v)),
      apply_perm_rows(perm, kron(cx.basis_v, cy.basis_vperp)),
      apply_perm_rows(perm, kron(cx.basis_vperp, cy.basis_vperp));
  return GrChart<Scalar>::with_bases(base, v, vp, tol);
}

}  // namespace grasscat
