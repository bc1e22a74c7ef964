#pragma once

#include "grasscat/instances.hpp"

namespace grasscat {

namespace detail {

/// Plain triple-loop product with a fixed summation order. Appending
/// zero blocks then multiplying gives bitwise the same entries as
/// multiplying first and padding after, which is exactly the
/// block-zero arithmetic the stabilization squares rely on; a blocked
/// GEMM may re-associate the shared partial sums instead.
template <typename Scalar>
Mat<Scalar> ordered_product(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = Mat<Scalar>::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Scalar acc(0);
      for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  return out;
}

}  // namespace detail

/// The stabilization-compatibility squares: padding commutes with the
/// structure maps and with both binary operations, by exact block-zero
/// arithmetic. Residuals must be identically zero.
template <typename Scalar>
Report check_stabilization_squares(SampleCaps caps, std::size_t samples, std::uint64_t seed,
                                   const Tolerance& tol = {}, bool mutate_pad = false) {
  Report rep{"stabilization squares", seed, 0.0, {}};
  auto pad_mor = [mutate_pad](const MorPoint<Scalar>& f, Index ds, Index dt) {
    MorPoint<Scalar> out = mor_stabilize(f, ds, dt);
    if (mutate_pad) out.map_mat *= Scalar(2);
    return out;
  };
  auto draw_pair = [caps, tol](Rng& rng) {
    const Index n = rng.uniform_int(1, caps.m_max);
    const Index k = rng.uniform_int(0, std::min(caps.k_max, n));
    const Index l = rng.uniform_int(0, std::min(caps.k_max, n));
    return std::pair{random_grpoint<Scalar>(rng, n, k, tol),
                     random_grpoint<Scalar>(rng, n, l, tol)};
  };
  auto draw_mor_pair = [caps, tol](Rng& rng) {
    const Index m = rng.uniform_int(1, caps.m_max);
    const Index n = rng.uniform_int(1, caps.m_max);
    const Index k = rng.uniform_int(0, std::min(caps.k_max, m));
    const Index l = rng.uniform_int(0, std::min(caps.k_max, n));
    const Index k2 = rng.uniform_int(0, std::min(caps.k_max, m));
    const Index l2 = rng.uniform_int(0, std::min(caps.k_max, n));
    auto f = random_morpoint<Scalar>(rng, random_grpoint<Scalar>(rng, m, k, tol), n, l, tol);
    auto g = random_morpoint<Scalar>(rng, random_grpoint<Scalar>(rng, m, k2, tol), n, l2, tol);
    return std::pair{f, g};
  };

  rep.items.push_back(detail::run_axiom(
      "oplus respects point stabilization (exact)", samples, seed, 41, 0.0,
      [&](Rng& rng, std::string*) {
        auto [x, y] = draw_pair(rng);
        auto via_sum = stabilize_gr(oplus_points(x, y), 2);
        auto via_pad = oplus_points(stabilize_gr(x, 1), stabilize_gr(y, 1));
        return exactly_equal(via_sum.frame, via_pad.frame) ? 0.0 : kInf;
      }));
  rep.items.push_back(detail::run_axiom(
      "otimes respects point stabilization (exact)", samples, seed, 42, 0.0,
      [&](Rng& rng, std::string*) {
        auto [x, y] = draw_pair(rng);
        const Index n = x.ambient_dim();
        auto via_prod = stabilize_gr(otimes_points(x, y), 2 * n + 1);
        auto via_pad = otimes_points(stabilize_gr(x, 1), stabilize_gr(y, 1));
        return exactly_equal(via_prod.frame, via_pad.frame) ? 0.0 : kInf;
      }));
  rep.items.push_back(detail::run_axiom(
      "oplus respects morphism stabilization (exact)", samples, seed, 43, 0.0,
      [&](Rng& rng, std::string*) {
        auto [f, g] = draw_mor_pair(rng);
        auto lhs = pad_mor(oplus_mor(f, g), 2, 2);
        auto rhs = oplus_mor(mor_stabilize(f, 1, 1), mor_stabilize(g, 1, 1));
        return (exactly_equal(lhs.map_mat, rhs.map_mat) &&
                exactly_equal(lhs.src.frame, rhs.src.frame) &&
                exactly_equal(lhs.dst.frame, rhs.dst.frame))
                   ? 0.0
                   : kInf;
      }));
  rep.items.push_back(detail::run_axiom(
      "otimes respects morphism stabilization (exact)", samples, seed, 44, 0.0,
      [&](Rng& rng, std::string*) {
        auto [f, g] = draw_mor_pair(rng);
        const Index m = f.src.ambient_dim();
        const Index n = f.dst.ambient_dim();
        auto lhs = pad_mor(otimes_mor(f, g), 2 * m + 1, 2 * n + 1);
        auto rhs = otimes_mor(mor_stabilize(f, 1, 1), mor_stabilize(g, 1, 1));
        return (exactly_equal(lhs.map_mat, rhs.map_mat) &&
                exactly_equal(lhs.src.frame, rhs.src.frame))
                   ? 0.0
                   : kInf;
      }));
  rep.items.push_back(detail::run_axiom(
      "stabilization commutes with s, t, e (exact)", samples, seed, 45, 0.0,
      [&](Rng& rng, std::string*) {
        auto [f, g] = draw_mor_pair(rng);
        (void)g;
        auto padded = pad_mor(f, 2, 3);
        const bool sources = exactly_equal(padded.src.frame, stabilize_gr(f.src, 2).frame);
        const bool targets = exactly_equal(padded.dst.frame, stabilize_gr(f.dst, 3).frame);
        auto e_pad = pad_mor(mor_identity(f.src), 2, 2);
        auto pad_e = mor_identity(stabilize_gr(f.src, 2));
        return (sources && targets && exactly_equal(e_pad.map_mat, pad_e.map_mat)) ? 0.0 : kInf;
      }));
  rep.items.push_back(detail::run_axiom(
      "stabilization commutes with composition (exact)", samples, seed, 46, 0.0,
      [&](Rng& rng, std::string*) {
        const Index m = rng.uniform_int(1, caps.m_max);
        const Index n = rng.uniform_int(1, caps.m_max);
        const Index p = rng.uniform_int(1, caps.m_max);
        auto f = random_morpoint<Scalar>(
            rng, random_grpoint<Scalar>(rng, m, std::min<Index>(1, m), tol), n,
            std::min(caps.k_max, n), tol);
        auto g = random_morpoint<Scalar>(rng, f.dst, p, std::min(caps.k_max, p), tol);
        auto fp = mor_stabilize(f, 1, 3);
        auto gp = mor_stabilize(g, 3, 2);
        MorPoint<Scalar> composed{f.src, g.dst,
                                  detail::ordered_product(g.map_mat, f.map_mat)};
        auto lhs = pad_mor(composed, 1, 2);
        Mat<Scalar> rhs = detail::ordered_product(gp.map_mat, fp.map_mat);
        return exactly_equal(lhs.map_mat, rhs) ? 0.0 : kInf;
      }));
  return rep;
}

/// Strict associativity and unitality of the matrix-category sum and
/// product on objects (dimension arithmetic is exact), plus the exact
/// block identities on morphisms that make the sum strictly
/// associative.
template <typename Scalar>
Report check_vf_strictness(Index n_max, std::size_t samples, std::uint64_t seed,
                           const Tolerance& tol = {}) {
  Report rep{"strict monoidal structure on V_F", seed, 0.0, {}};
  rep.items.push_back(detail::run_axiom(
      "object arithmetic strictly associative and unital (exact)", samples, seed, 51, 0.0,
      [&](Rng& rng, std::string*) {
        const Index a = rng.uniform_int(0, n_max);
        const Index b = rng.uniform_int(0, n_max);
        const Index c = rng.uniform_int(0, n_max);
        const bool ok = ((a + b) + c == a + (b + c)) && (a + 0 == a) && (0 + a == a) &&
                        ((a * b) * c == a * (b * c)) && (a * 1 == a) && (1 * a == a);
        return ok ? 0.0 : kInf;
      }));
  rep.items.push_back(detail::run_axiom(
      "block sum strictly associative on morphisms (exact)", samples, seed, 52, 0.0,
      [&](Rng& rng, std::string*) {
        auto draw = [&](Index r, Index c) { return VfMor<Scalar>{random_matrix<Scalar>(rng, r, c)}; };
        auto x = draw(rng.uniform_int(0, n_max), rng.uniform_int(0, n_max));
        auto y = draw(rng.uniform_int(0, n_max), rng.uniform_int(0, n_max));
        auto z = draw(rng.uniform_int(0, n_max), rng.uniform_int(0, n_max));
        const bool assoc =
            exactly_equal(vf_oplus(vf_oplus(x, y), z).mat, vf_oplus(x, vf_oplus(y, z)).mat);
        auto zero = VfMor<Scalar>{Mat<Scalar>(0, 0)};
        const bool unital = exactly_equal(vf_oplus(x, zero).mat, x.mat) &&
                            exactly_equal(vf_oplus(zero, x).mat, x.mat) &&
                            exactly_equal(vf_otimes(x, vf_identity<Scalar>(1)).mat, x.mat) &&
                            exactly_equal(vf_otimes(vf_identity<Scalar>(1), x).mat, x.mat);
        return (assoc && unital) ? 0.0 : kInf;
      }));
  (void)tol;
  return rep;
}

/// is_iso on sampled components of a witness case.
template <typename ObjC, typename MorC, typename ObjD, typename Scalar>
Report check_witness_iso(const NatTransCase<ObjC, MorC, ObjD, MorPoint<Scalar>>& c,
                         std::size_t samples, std::uint64_t seed, const Tolerance& tol = {}) {
  Report rep{"witness invertibility: " + c.name, seed, 0.0, {}};
  rep.items.push_back(detail::run_axiom(
      "every component is an isomorphism", samples, seed, 61, 0.0,
      [&](Rng& rng, std::string*) {
        ObjC x = c.f.dom.sample_object(rng);
        return is_iso(c.phi.component(x), tol) ? 0.0 : kInf;
      }));
  return rep;
}

template <typename ObjC, typename MorC, typename ObjD, typename Scalar>
Report check_witness_iso(const NatTransCase<ObjC, MorC, ObjD, VfMor<Scalar>>& c,
                         std::size_t samples, std::uint64_t seed, const Tolerance& tol = {}) {
  Report rep{"witness invertibility: " + c.name, seed, 0.0, {}};
  rep.items.push_back(detail::run_axiom(
      "every component is an invertible matrix", samples, seed, 62, 0.0,
      [&](Rng& rng, std::string*) {
        ObjC x = c.f.dom.sample_object(rng);
        auto w = c.phi.component(x);
        if (w.source_dim() != w.target_dim()) return kInf;
        return smallest_singular_value(w.mat) > tol.eps_rank ? 0.0 : kInf;
      }));
  return rep;
}

}  // namespace grasscat
