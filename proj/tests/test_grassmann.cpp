#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscat/grassmann.hpp"

#include "oracles.hpp"

using namespace grasscat;

namespace {
const Tolerance tol;

template <typename Scalar>
GrChart<Scalar> chart_at(const GrPoint<Scalar>& p) {
  return GrChart<Scalar>::at(p, tol);
}
}  // namespace

TEST_CASE("chart_embed at zero coordinate returns the base") {
  auto base = GrPoint<Real>::standard(4, 2);
  auto chart = chart_at(base);
  auto w = chart_embed(chart, Mat<Real>::Zero(2, 2), tol);
  CHECK(same_subspace(w, base, tol));
}

TEST_CASE("chart_embed of an explicit line matches the outer-product oracle") {
  auto base = GrPoint<Real>::standard(2, 1);
  auto chart = chart_at(base);
  Mat<Real> a(1, 1);
  a << 2.0;
  auto w = chart_embed(chart, a, tol);
  // span(e1 + 2 e2), projection (1/5) [[1,2],[2,4]]
  Mat<Real> direction(2, 1);
  direction << 1.0, 2.0;
  Mat<Real> expected = direction * direction.transpose() / 5.0;
  CHECK(mat_dist(w.projection(), expected) <= tol.eps_eq);
}

TEST_CASE("chart_embed validates shapes") {
  auto chart = chart_at(GrPoint<Real>::standard(4, 2));
  CHECK_THROWS_AS(chart_embed(chart, Mat<Real>::Zero(3, 2), tol), ShapeMismatch);
}

TEST_CASE("chart_coords of the base is zero") {
  auto base = GrPoint<Complex>::standard(5, 2);
  auto chart = chart_at(base);
  CHECK(max_abs(chart_coords(chart, base, tol)) <= tol.eps_eq);
}

TEST_CASE("chart_coords solves the frame equation") {
  auto base = GrPoint<Real>::standard(2, 1);
  auto chart = chart_at(base);
  Mat<Real> span(2, 1);
  span << 1.0, 2.0;
  auto w = GrPoint<Real>::from_span(span, tol);
  Mat<Real> a = chart_coords(chart, w, tol);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 1);
  CHECK(std::abs(std::abs(a(0, 0)) - 2.0) <= 1e-12);
  CHECK(same_subspace(chart_embed(chart, a, tol), w, tol));
}

TEST_CASE("chart_coords rejects subspaces outside the domain") {
  auto base = GrPoint<Real>::standard(2, 1);
  auto chart = chart_at(base);
  Mat<Real> e2(2, 1);
  e2 << 0.0, 1.0;
  CHECK_THROWS_AS(chart_coords(chart, GrPoint<Real>::from_frame(e2, tol), tol),
                  OutsideChartDomain);
}

TEST_CASE("chart_embed and chart_coords are mutually inverse on a full grid") {
  // 1000 instances for every (m, k) with m <= 8
  Rng rng(101);
  for (Index m = 1; m <= 8; ++m) {
    for (Index k = 0; k <= m; ++k) {
      double worst = 0.0;
      for (int trial = 0; trial < 1000; ++trial) {
        auto base = random_grpoint<Complex>(rng, m, k, tol);
        auto chart = chart_at(base);
        Mat<Complex> a = random_matrix<Complex>(rng, m - k, k);
        auto w = chart_embed(chart, a, tol);
        Mat<Complex> back = chart_coords(chart, w, tol);
        worst = std::max(worst, mat_dist(back, a) / (1.0 + max_abs(a)));
      }
      CHECK(worst <= 1e-8);
    }
  }
}

TEST_CASE("transition from a chart to itself is the identity on coordinates") {
  Rng rng(7);
  auto base = random_grpoint<Real>(rng, 5, 2, tol);
  auto chart = chart_at(base);
  Mat<Real> a = random_matrix<Real>(rng, 3, 2);
  CHECK(mat_dist(chart_transition(chart, chart, a, tol), a) <= 1e-9);
}

TEST_CASE("explicit transition solve on the two-line example") {
  auto from = chart_at(GrPoint<Real>::standard(2, 1));
  Mat<Real> diag(2, 1);
  diag << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  auto to = chart_at(GrPoint<Real>::from_frame(diag, tol));
  Mat<Real> zero = Mat<Real>::Zero(1, 1);
  Mat<Real> t = chart_transition(from, to, zero, tol);
  Mat<Real> direct = chart_coords(to, GrPoint<Real>::standard(2, 1), tol);
  CHECK(mat_dist(t, direct) <= 1e-12);
  CHECK(std::abs(std::abs(t(0, 0)) - 1.0) <= 1e-12);
}

TEST_CASE("atlas transitions satisfy the cocycle identity") {
  Rng rng(303);
  int done = 0;
  while (done < 100) {
    const Index m = rng.uniform_int(2, 6);
    const Index k = rng.uniform_int(1, m - 1);
    auto w = random_grpoint<Complex>(rng, m, k, tol);
    GrChart<Complex> charts[3];
    bool ok = true;
    for (auto& c : charts) {
      auto base = perturb_subspace(rng, w, 0.25, tol);
      c = chart_at(base);
      if (smallest_singular_value((c.basis_v.adjoint() * w.frame).eval()) < 0.25) ok = false;
    }
    if (!ok) continue;
    Mat<Complex> a = chart_coords(charts[0], w, tol);
    Mat<Complex> direct = chart_transition(charts[0], charts[2], a, tol);
    Mat<Complex> via = chart_transition(charts[1], charts[2],
                                        chart_transition(charts[0], charts[1], a, tol), tol);
    CHECK(mat_dist(direct, via) <= 1e-8 * (1.0 + max_abs(direct)));
    ++done;
  }
}

TEST_CASE("transition maps are continuous at desk scale") {
  auto from = chart_at(GrPoint<Real>::standard(3, 1));
  Rng rng(5);
  auto to = chart_at(perturb_subspace(rng, GrPoint<Real>::standard(3, 1), 0.2, tol));
  Mat<Real> a(2, 1);
  a << 0.1, -0.2;
  Mat<Real> t0 = chart_transition(from, to, a, tol);
  const double h = 1e-6;
  for (Index i = 0; i < 2; ++i) {
    Mat<Real> ah = a;
    ah(i, 0) += h;
    Mat<Real> th = chart_transition(from, to, ah, tol);
    CHECK(mat_dist(th, t0) <= 100.0 * h);  // bounded difference quotient
  }
}

TEST_CASE("stabilize_gr pads the projection with a zero row and column") {
  auto p = GrPoint<Real>::standard(2, 1);
  auto q = stabilize_gr(p);
  CHECK(q.ambient_dim() == 3);
  CHECK(q.sub_dim() == 1);
  Mat<Real> padded = Mat<Real>::Zero(3, 3);
  padded.topLeftCorner(2, 2) = p.projection();
  CHECK(exactly_equal(q.projection(), padded));

  auto two_step = stabilize_gr(stabilize_gr(p));
  CHECK(exactly_equal(two_step.frame, stabilize_gr(p, 2).frame));
}

TEST_CASE("iota_prime shifts and adjoins e1") {
  auto p = GrPoint<Real>::standard(2, 1);  // span(e1) in F^2
  auto q = iota_prime(p);
  CHECK(q.ambient_dim() == 3);
  CHECK(q.sub_dim() == 2);
  // expect span(e1, e2) in F^3
  CHECK(same_subspace(q, GrPoint<Real>::standard(3, 2), tol));

  auto zero = GrPoint<Real>::zero(4);
  auto line = iota_prime(zero);
  CHECK(line.sub_dim() == 1);
  CHECK(same_subspace(line, GrPoint<Real>::standard(5, 1), tol));
}

TEST_CASE("iota_prime output always contains e1") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = rng.uniform_int(1, 7);
    const Index k = rng.uniform_int(0, m);
    auto q = iota_prime(random_grpoint<Complex>(rng, m, k, tol));
    CHECK(q.sub_dim() == k + 1);
    Vec<Complex> e1 = Vec<Complex>::Zero(m + 1);
    e1(0) = Complex(1.0);
    CHECK((q.projection() * e1 - e1).cwiseAbs().maxCoeff() <= tol.eps_eq);
  }
}

TEST_CASE("iota_g re-indexes and adjoins e_{k+1} (x) e_1") {
  // k=1, trunc=2, p = span(e1 (x) e1) = span(e1) in F^2
  auto p = GrPoint<Real>::standard(2, 1);
  auto q = iota_g(p, 1, 2);
  CHECK(q.ambient_dim() == 4);
  CHECK(q.sub_dim() == 2);
  // expected span(e1, e3): flat indices of e1(x)e1 and e2(x)e1
  Mat<Real> expected = Mat<Real>::Zero(4, 2);
  expected(0, 0) = 1.0;
  expected(2, 1) = 1.0;
  CHECK(same_subspace(q, GrPoint<Real>::from_frame(expected, tol), tol));

  CHECK_THROWS_AS(iota_g(p, 2, 2), ShapeMismatch);
}

TEST_CASE("iterated iota_g matches the direct index bookkeeping") {
  Rng rng(29);
  const Index trunc = 3;
  for (int trial = 0; trial < 20; ++trial) {
    auto p = random_grpoint<Real>(rng, trunc, 1, tol);
    auto q = iota_g(iota_g(p, 1, trunc), 2, trunc);
    CHECK(q.ambient_dim() == 3 * trunc);
    CHECK(q.sub_dim() == 3);
    // brute force: re-indexed p plus <e_2 (x) e_1, e_3 (x) e_1>
    Mat<Real> expected = Mat<Real>::Zero(3 * trunc, 3);
    expected.block(0, 0, trunc, 1) = p.frame;
    expected(trunc, 1) = 1.0;      // e2 (x) e1
    expected(2 * trunc, 2) = 1.0;  // e3 (x) e1
    CHECK(same_subspace(q, GrPoint<Real>::from_frame(expected, tol), tol));
  }
}

TEST_CASE("stabilizations are injective on projection matrices") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Index m = rng.uniform_int(2, 6);
    const Index k = rng.uniform_int(1, m);
    auto a = random_grpoint<Complex>(rng, m, k, tol);
    auto b = random_grpoint<Complex>(rng, m, k, tol);
    if (same_subspace(a, b, tol)) continue;
    CHECK(!same_subspace(stabilize_gr(a), stabilize_gr(b), tol));
    CHECK(!same_subspace(iota_prime(a), iota_prime(b), tol));
    if (k == m) continue;
  }
  // iota_g injectivity on its domain
  for (int trial = 0; trial < 20; ++trial) {
    const Index trunc = 4;
    auto a = random_grpoint<Real>(rng, trunc, 1, tol);
    auto b = random_grpoint<Real>(rng, trunc, 1, tol);
    if (same_subspace(a, b, tol)) continue;
    CHECK(!same_subspace(iota_g(a, 1, trunc), iota_g(b, 1, trunc), tol));
  }
}

TEST_CASE("with_bases validates unitarity and span") {
  auto base = GrPoint<Real>::standard(3, 1);
  Mat<Real> v = base.frame;
  Mat<Real> vperp = orth_complement(v, tol);
  CHECK_NOTHROW(GrChart<Real>::with_bases(base, v, vperp, tol));
  Mat<Real> bad = vperp;
  bad(0, 0) += 0.1;
  CHECK_THROWS_AS(GrChart<Real>::with_bases(base, v, bad, tol), NotOrthonormal);
  Mat<Real> wrong_span = vperp.leftCols(1);
  CHECK_THROWS_AS(GrChart<Real>::with_bases(base, wrong_span, orth_complement(wrong_span, tol), tol),
                  ShapeMismatch);
}
