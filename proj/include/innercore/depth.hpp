#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/QR>
#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "innercore/errors.hpp"

namespace innercore {

// Diagonal loading schedule tried when the plain covariance factorization fails.
// Each delta is scaled by trace(cov)/d before being added to the diagonal.
struct RidgePolicy {
  std::vector<double> deltas{1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3, 1e-2};
};

template <class Scalar>
struct InverseCovarianceT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> matrix;
  Scalar ridge_used = Scalar(0);  // diagonal load that made the factorization succeed
};
using InverseCovariance = InverseCovarianceT<double>;

// Sample covariance of the rows (observations), n-1 denominator.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> sample_covariance(
    const Eigen::MatrixBase<Derived>& rows) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = rows.rows();
  if (n < 2) throw InvariantViolation("sample_covariance: need at least 2 rows");
  Mat centered = rows.derived();
  centered.rowwise() -= rows.derived().colwise().mean();
  return Mat((centered.adjoint() * centered) / Scalar(n - 1));
}

namespace detail {

// Names the columns responsible for a singular covariance: zero-variance ones
// if any exist, otherwise the dependent columns of a rank-revealing QR.
template <class Mat>
std::string degenerate_columns(const Mat& cov) {
  using Scalar = typename Mat::Scalar;
  const Eigen::Index d = cov.rows();
  std::string zero;
  const Scalar scale = std::max<Scalar>(cov.diagonal().maxCoeff(), Scalar(0));
  for (Eigen::Index i = 0; i < d; ++i) {
    if (cov(i, i) <= scale * Scalar(1e-14)) {
      if (!zero.empty()) zero += ", ";
      zero += std::to_string(i);
    }
  }
  if (!zero.empty()) return "zero-variance columns {" + zero + "}";
  Eigen::ColPivHouseholderQR<Mat> qr(cov);
  qr.setThreshold(Scalar(1e-12));
  const Eigen::Index rank = qr.rank();
  std::string dep;
  const auto& perm = qr.colsPermutation().indices();
  for (Eigen::Index i = rank; i < d; ++i) {
    if (!dep.empty()) dep += ", ";
    dep += std::to_string(perm[i]);
  }
  return "collinear columns {" + dep + "}";
}

}  // namespace detail

// Inverse of the sample covariance of the feature rows. On a singular matrix the
// ridge schedule is escalated; the load that succeeded is reported in ridge_used.
// Throws NumericalError naming the degenerate columns if every load fails.
template <class Derived>
InverseCovarianceT<typename Derived::Scalar> inverse_covariance(
    const Eigen::MatrixBase<Derived>& rows, const RidgePolicy& policy = {}) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (rows.cols() < 1) throw InvariantViolation("inverse_covariance: no feature columns");
  const Mat cov = sample_covariance(rows);
  const Eigen::Index d = cov.rows();
  const Mat eye = Mat::Identity(d, d);
  const Scalar scale = cov.trace() / Scalar(d);

  auto try_invert = [&](const Mat& m, Mat& out) {
    Eigen::LLT<Mat> llt(m);
    if (llt.info() != Eigen::Success) return false;
    out = llt.solve(eye);
    return out.allFinite();
  };

  Mat inv;
  if (try_invert(cov, inv)) {
    inv = ((inv + inv.transpose()) / Scalar(2)).eval();
    return {std::move(inv), Scalar(0)};
  }
  for (double delta : policy.deltas) {
    const Scalar load = Scalar(delta) * scale;
    if (!(load > Scalar(0))) continue;
    if (try_invert(Mat(cov + load * eye), inv)) {
      inv = ((inv + inv.transpose()) / Scalar(2)).eval();
      return {std::move(inv), load};
    }
  }
  throw NumericalError("covariance singular after ridge escalation; " +
                       detail::degenerate_columns(cov));
}

// Mahalanobis depth of x about the origin: 1 / (1 + x' S x) with S the inverse
// covariance. Lands in (0, 1]; equals 1 exactly iff x is the zero vector.
template <class DerivedX, class DerivedS>
typename DerivedX::Scalar mhdo(const Eigen::MatrixBase<DerivedX>& x,
                               const Eigen::MatrixBase<DerivedS>& inv_cov) {
  using Scalar = typename DerivedX::Scalar;
  if (x.size() != inv_cov.rows() || inv_cov.rows() != inv_cov.cols())
    throw InvariantViolation("mhdo: dimension mismatch");
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> xv = x.derived();
  Scalar q = xv.dot(inv_cov.derived() * xv);
  if (!(q >= Scalar(0))) q = Scalar(0);  // clamp tiny negative rounding
  return Scalar(1) / (Scalar(1) + q);
}

// Row-wise depth of a feature matrix. Pure function of its inputs.
template <class DerivedF, class DerivedS>
Eigen::Matrix<typename DerivedF::Scalar, Eigen::Dynamic, 1> depth_vector(
    const Eigen::MatrixBase<DerivedF>& feature_rows,
    const Eigen::MatrixBase<DerivedS>& inv_cov) {
  using Scalar = typename DerivedF::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  if (feature_rows.cols() != inv_cov.rows() || inv_cov.rows() != inv_cov.cols())
    throw InvariantViolation("depth_vector: dimension mismatch");
  Vec q = (feature_rows.derived() * inv_cov.derived())
              .cwiseProduct(feature_rows.derived())
              .rowwise()
              .sum();
  q = q.cwiseMax(Scalar(0));
  return Vec((q.array() + Scalar(1)).inverse());
}

}  // namespace innercore
