#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace fssinv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// ---------------------------------------------------------------------------
// Per-feature standardization of the curve inputs.  Statistics are fitted on
// the training split only and frozen afterwards.
// ---------------------------------------------------------------------------

struct FeatureScaler {
  Vector means;
  Vector std_devs;               // floored at 1e-12
  std::vector<int> zero_variance; // feature indices flagged at fit time
};

inline FeatureScaler scaler_fit(const Matrix& x) {
  if (x.rows() < 2) throw std::invalid_argument("scaler_fit: need at least 2 rows");
  FeatureScaler s;
  s.means = x.colwise().mean();
  const Matrix centered = x.rowwise() - s.means.transpose();
  s.std_devs = (centered.array().square().colwise().sum() /
                static_cast<double>(x.rows() - 1))
                   .sqrt()
                   .matrix();
  for (Eigen::Index j = 0; j < s.std_devs.size(); ++j) {
    if (s.std_devs(j) < 1e-12) {
      s.std_devs(j) = 1e-12;
      s.zero_variance.push_back(static_cast<int>(j));
    }
  }
  return s;
}

inline Matrix scaler_apply(const FeatureScaler& s, const Matrix& x) {
  if (x.cols() != s.means.size())
    throw std::invalid_argument("scaler_apply: dimension mismatch");
  return (x.rowwise() - s.means.transpose()).array().rowwise() /
         s.std_devs.transpose().array();
}

inline Matrix scaler_invert(const FeatureScaler& s, const Matrix& x) {
  if (x.cols() != s.means.size())
    throw std::invalid_argument("scaler_invert: dimension mismatch");
  return (x.array().rowwise() * s.std_devs.transpose().array()).matrix().rowwise() +
         s.means.transpose();
}

// ---------------------------------------------------------------------------
// PCA via eigendecomposition of the sample covariance (deterministic
// symmetric solver).  Component rows are orthonormal, ordered by descending
// eigenvalue, with the sign fixed so each row's largest-magnitude entry is
// positive.
// ---------------------------------------------------------------------------

struct PcaBasis {
  Vector mean;                // input-dim
  Matrix components;          // k x input-dim, orthonormal rows
  Vector explained_variance;  // descending, >= 0
};

inline PcaBasis pca_fit(const Matrix& x, int k) {
  const Eigen::Index n = x.rows(), p = x.cols();
  if (n < 2) throw std::invalid_argument("pca_fit: need at least 2 samples");
  if (k < 1 || k > std::min<Eigen::Index>(n - 1, p))
    throw std::invalid_argument("pca_fit: k must satisfy 1 <= k <= min(n-1, p)");

  PcaBasis basis;
  basis.mean = x.colwise().mean();
  const Matrix centered = x.rowwise() - basis.mean.transpose();
  const Matrix cov = centered.transpose() * centered / static_cast<double>(n - 1);

  Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("pca_fit: eigendecomposition failed");

  // Eigen returns ascending eigenvalues; take the top k from the back.
  basis.components.resize(k, p);
  basis.explained_variance.resize(k);
  for (int i = 0; i < k; ++i) {
    const Eigen::Index src = p - 1 - i;
    Vector comp = solver.eigenvectors().col(src);
    Eigen::Index imax = 0;
    comp.array().abs().maxCoeff(&imax);
    if (comp(imax) < 0.0) comp = -comp;
    basis.components.row(i) = comp.transpose();
    basis.explained_variance(i) = std::max(solver.eigenvalues()(src), 0.0);
  }
  return basis;
}

inline Matrix pca_transform(const PcaBasis& basis, const Matrix& x) {
  if (x.cols() != basis.mean.size())
    throw std::invalid_argument("pca_transform: dimension mismatch");
  return (x.rowwise() - basis.mean.transpose()) * basis.components.transpose();
}

inline Matrix pca_inverse(const PcaBasis& basis, const Matrix& z) {
  if (z.cols() != basis.components.rows())
    throw std::invalid_argument("pca_inverse: dimension mismatch");
  return (z * basis.components).rowwise() + basis.mean.transpose();
}

// ---------------------------------------------------------------------------
// Min-max scaling of the geometry targets to [0, 1].
// ---------------------------------------------------------------------------

struct TargetScaler {
  Vector mins;
  Vector maxs;
};

inline TargetScaler target_fit(const Matrix& y) {
  if (y.rows() < 1) throw std::invalid_argument("target_fit: empty targets");
  TargetScaler s;
  s.mins = y.colwise().minCoeff();
  s.maxs = y.colwise().maxCoeff();
  for (Eigen::Index j = 0; j < s.mins.size(); ++j)
    if (!(s.maxs(j) > s.mins(j)))
      throw std::invalid_argument("target_fit: target dimension " + std::to_string(j) +
                                  " is constant");
  return s;
}

inline Matrix target_apply(const TargetScaler& s, const Matrix& y) {
  if (y.cols() != s.mins.size())
    throw std::invalid_argument("target_apply: dimension mismatch");
  return (y.rowwise() - s.mins.transpose()).array().rowwise() /
         (s.maxs - s.mins).transpose().array();
}

inline Matrix target_invert(const TargetScaler& s, const Matrix& y) {
  if (y.cols() != s.mins.size())
    throw std::invalid_argument("target_invert: dimension mismatch");
  return (y.array().rowwise() * (s.maxs - s.mins).transpose().array()).matrix().rowwise() +
         s.mins.transpose();
}

}  // namespace fssinv
