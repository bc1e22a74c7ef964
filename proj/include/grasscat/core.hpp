#pragma once

#include <Eigen/Dense>

#include <complex>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace grasscat {

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Real = double;
using Complex = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Numerical thresholds shared by every operation. eps_orth bounds
/// orthonormality residuals, eps_rank thresholds singular values,
/// eps_eq bounds matrix-equality comparisons.
struct Tolerance {
  double eps_orth = 1e-10;
  double eps_rank = 1e-8;
  double eps_eq = 1e-8;

  void validate() const {
    if (!(eps_orth > 0.0) || !(eps_rank > 0.0) || !(eps_eq > 0.0))
      throw std::invalid_argument("tolerances must be strictly positive");
    if (eps_rank < eps_orth)
      throw std::invalid_argument("eps_rank must be >= eps_orth");
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RankDeficient : Error { using Error::Error; };
struct NotOrthonormal : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct OutsideChartDomain : Error { using Error::Error; };
struct NotComposable : Error { using Error::Error; };
struct AmbientMismatch : Error { using Error::Error; };
struct SamplerExhausted : Error { using Error::Error; };
struct TypingMismatch : Error { using Error::Error; };
struct CocycleViolation : Error { using Error::Error; };
struct InconsistentSamples : Error { using Error::Error; };
struct NotRankOne : Error { using Error::Error; };
struct NotCircle : Error { using Error::Error; };
struct UndersampledLoop : Error { using Error::Error; };
struct SectionMismatch : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0.0;
  return a.cwiseAbs().maxCoeff();
}

/// Max-abs entrywise distance; +inf when shapes differ.
template <typename DerivedA, typename DerivedB>
double mat_dist(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return kInf;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
bool exactly_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  if (a.size() == 0) return true;
  return (a.derived().array() == b.derived().array()).all();
}

/// Smallest singular value; zero-sized matrices count as vacuously
/// full rank.
template <typename Derived>
double smallest_singular_value(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() == 0 || a.cols() == 0) return kInf;
  using Scalar = typename Derived::Scalar;
  Eigen::JacobiSVD<Mat<Scalar>> svd(a.derived());
  return svd.singularValues().minCoeff();
}

template <typename Derived>
bool is_orthonormal(const Eigen::MatrixBase<Derived>& q, double eps) {
  if (q.cols() == 0) return true;
  using Scalar = typename Derived::Scalar;
  Mat<Scalar> gram = q.adjoint() * q;
  gram -= Mat<Scalar>::Identity(q.cols(), q.cols());
  return max_abs(gram) <= eps;
}

template <typename Derived>
std::string show_matrix(const Eigen::MatrixBase<Derived>& a) {
  static const Eigen::IOFormat fmt(Eigen::FullPrecision, 0, ", ", "; ", "", "", "[", "]");
  std::ostringstream os;
  os << a.rows() << "x" << a.cols() << " " << a.derived().format(fmt);
  return os.str();
}

}  // namespace grasscat
