#pragma once

#include "grasscat/core.hpp"

#include <cstdint>
#include <random>

namespace grasscat {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ (0x9E3779B97F4A7C15ull + b + (a << 6) + (a >> 2)));
}

/// Seeded generator. Checks fork a fresh Rng per (axiom, sample) so
/// results do not depend on evaluation order.
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  Rng fork(std::uint64_t salt) { return Rng(hash_combine(engine(), salt)); }

  double normal() {
    std::normal_distribution<double> d;
    return d(engine);
  }

  double uniform() {
    std::uniform_real_distribution<double> d(0.0, 1.0);
    return d(engine);
  }

  // inclusive bounds
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> d(lo, hi);
    return d(engine);
  }

  bool coin() { return uniform_int(0, 1) == 1; }
};

template <typename Scalar>
Scalar random_scalar(Rng& rng);

template <>
inline Real random_scalar<Real>(Rng& rng) {
  return rng.normal();
}

template <>
inline Complex random_scalar<Complex>(Rng& rng) {
  const double re = rng.normal();
  const double im = rng.normal();
  return Complex(re, im) / std::sqrt(2.0);
}

template <typename Scalar>
Mat<Scalar> random_matrix(Rng& rng, Index rows, Index cols) {
  Mat<Scalar> a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = random_scalar<Scalar>(rng);
  return a;
}

/// Square matrix with smallest singular value bounded away from zero.
template <typename Scalar>
Mat<Scalar> random_invertible(Rng& rng, Index n, double min_sv = 0.3) {
  if (n == 0) return Mat<Scalar>(0, 0);
  Mat<Scalar> best = random_matrix<Scalar>(rng, n, n);
  double best_sv = smallest_singular_value(best);
  for (int attempt = 0; attempt < 64 && best_sv < min_sv; ++attempt) {
    Mat<Scalar> cand = random_matrix<Scalar>(rng, n, n);
    const double sv = smallest_singular_value(cand);
    if (sv > best_sv) {
      best = cand;
      best_sv = sv;
    }
  }
  if (best_sv < min_sv)
    throw SamplerExhausted("could not draw a well-conditioned invertible matrix");
  return best;
}

}  // namespace grasscat
