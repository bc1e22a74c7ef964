#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grasscat/linalg.hpp"
#include "grasscat/rng.hpp"

#include "oracles.hpp"

using namespace grasscat;

namespace {
const Tolerance tol;
}

TEST_CASE("orthonormalize keeps an identity frame") {
  Mat<Real> id = Mat<Real>::Identity(3, 3);
  Mat<Real> q = orthonormalize(id, tol);
  CHECK(mat_dist(proj_matrix(q), proj_matrix(id)) <= tol.eps_eq);
  CHECK(is_orthonormal(q, tol.eps_orth));
}

TEST_CASE("orthonormalize normalizes a single column") {
  Mat<Real> v(2, 1);
  v << 3.0, 4.0;
  Mat<Real> q = orthonormalize(v, tol);
  Mat<Real> expected(2, 1);
  expected << 0.6, 0.8;
  // direction is defined only up to sign
  const double d = std::min(mat_dist(q, expected), mat_dist(q, (-expected).eval()));
  CHECK(d <= 1e-12);
  CHECK(is_orthonormal(q, tol.eps_orth));
}

TEST_CASE("orthonormalize agrees with the Gram-Schmidt oracle on spans") {
  Mat<Real> a(2, 2);
  a << 1.0, 1.0, 0.0, 1.0;
  Mat<Real> q = orthonormalize(a, tol);
  Mat<Real> gs = oracles::gram_schmidt(a);
  CHECK(mat_dist(proj_matrix(q), proj_matrix(gs)) <= tol.eps_eq);
  CHECK(mat_dist(proj_matrix(q), Mat<Real>::Identity(2, 2)) <= tol.eps_eq);
}

TEST_CASE("orthonormalize rejects rank-deficient frames") {
  Mat<Real> a(3, 2);
  a << 1.0, 2.0, 1.0, 2.0, 1.0, 2.0;
  CHECK_THROWS_AS(orthonormalize(a, tol), RankDeficient);
  CHECK_THROWS_AS(orthonormalize(Mat<Real>::Zero(2, 3), tol), RankDeficient);
}

TEST_CASE("orthonormalize is idempotent up to a right unitary factor") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = rng.uniform_int(1, 8);
    const Index k = rng.uniform_int(0, m);
    Mat<Complex> a = random_matrix<Complex>(rng, m, k);
    if (k > 0 && smallest_singular_value(a) <= 1e-3) continue;
    Mat<Complex> q = orthonormalize(a, tol);
    Mat<Complex> q2 = orthonormalize(q, tol);
    CHECK(is_orthonormal(q, tol.eps_orth));
    CHECK(mat_dist(proj_matrix(q), proj_matrix(a.cols() ? q2 : q)) <= tol.eps_eq);
    CHECK(mat_dist(proj_matrix(q), proj_matrix(q2)) <= tol.eps_eq);
  }
}

TEST_CASE("orth_complement on a standard basis vector") {
  Mat<Real> e1 = Mat<Real>::Identity(2, 2).leftCols(1);
  Mat<Real> c = orth_complement(e1, tol);
  Mat<Real> e2(2, 1);
  e2 << 0.0, 1.0;
  CHECK(mat_dist(proj_matrix(c), proj_matrix(e2)) <= tol.eps_eq);
}

TEST_CASE("orth_complement matches the null-space oracle, sign-free") {
  Mat<Real> v(2, 1);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Mat<Real> c = orth_complement(v, tol);
  Mat<Real> expected = oracles::complement_by_svd(v);
  CHECK(mat_dist(proj_matrix(c), proj_matrix(expected)) <= tol.eps_eq);
}

TEST_CASE("orth_complement of the full space is empty") {
  Mat<Real> id = Mat<Real>::Identity(4, 4);
  Mat<Real> c = orth_complement(id, tol);
  CHECK(c.rows() == 4);
  CHECK(c.cols() == 0);
}

TEST_CASE("orth_complement rejects non-orthonormal input") {
  Mat<Real> a(2, 1);
  a << 1.0, 1.0;
  CHECK_THROWS_AS(orth_complement(a, tol), NotOrthonormal);
}

TEST_CASE("complement stacks to a unitary matrix") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = rng.uniform_int(1, 8);
    const Index k = rng.uniform_int(0, m);
    Mat<Complex> a = random_matrix<Complex>(rng, m, k);
    if (k > 0 && smallest_singular_value(a) <= 1e-3) continue;
    Mat<Complex> q = orthonormalize(a, tol);
    Mat<Complex> c = orth_complement(q, tol);
    Mat<Complex> u(m, m);
    u << q, c;
    CHECK(is_orthonormal(u, tol.eps_orth));
  }
}

TEST_CASE("proj_matrix basics") {
  Mat<Real> e1 = Mat<Real>::Identity(2, 2).leftCols(1);
  Mat<Real> p = proj_matrix(e1);
  Mat<Real> expected(2, 2);
  expected << 1.0, 0.0, 0.0, 0.0;
  CHECK(mat_dist(p, expected) == 0.0);

  Mat<Real> v(2, 1);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Mat<Real> half = proj_matrix(v);
  Mat<Real> expected_half(2, 2);
  expected_half << 0.5, 0.5, 0.5, 0.5;
  CHECK(mat_dist(half, expected_half) <= 1e-15);

  Mat<Real> id = Mat<Real>::Identity(5, 5);
  CHECK(mat_dist(proj_matrix(id), id) == 0.0);
}

TEST_CASE("projections are Hermitian idempotents with trace k") {
  Rng rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    const Index m = rng.uniform_int(1, 8);
    const Index k = rng.uniform_int(0, m);
    Mat<Complex> a = random_matrix<Complex>(rng, m, k);
    if (k > 0 && smallest_singular_value(a) <= 1e-3) continue;
    Mat<Complex> q = orthonormalize(a, tol);
    Mat<Complex> p = proj_matrix(q);
    CHECK(mat_dist(p, p.adjoint().eval()) <= tol.eps_eq);
    CHECK(mat_dist((p * p).eval(), p) <= tol.eps_eq);
    CHECK(std::abs(p.trace() - Complex(static_cast<double>(k))) <= tol.eps_eq);
  }
}

TEST_CASE("tolerance invariants are enforced") {
  Tolerance bad;
  bad.eps_rank = 1e-12;  // below eps_orth
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  Tolerance zero;
  zero.eps_eq = 0.0;
  CHECK_THROWS_AS(zero.validate(), std::invalid_argument);
  CHECK_NOTHROW(Tolerance{}.validate());
}
