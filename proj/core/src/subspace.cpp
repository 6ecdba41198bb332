#include "doa/subspace.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace doa {

CMatrix hermitized(const CMatrix& m) {
  return 0.5 * (m + m.adjoint());
}

CMatrix exchange_matrix(int m) {
  CMatrix j = CMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) j(i, m - 1 - i) = 1.0;
  return j;
}

CovarianceEstimate::CovarianceEstimate(CMatrix matrix_, CovarianceKind kind_)
    : matrix(hermitized(matrix_)), kind(kind_) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 1) {
    throw invalid_argument("covariance estimate must be square");
  }
  if (!matrix.allFinite()) {
    throw invalid_argument("covariance estimate contains non-finite entries");
  }
}

CovarianceEstimate sample_covariance(const SnapshotSet& snapshots) {
  const int m = snapshots.num_sensors();
  const int n = snapshots.num_snapshots();
  CMatrix c(m, m);
  std::vector<Complex> terms(n);
  const auto before = [](const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      for (int t = 0; t < n; ++t) {
        terms[t] = snapshots.data(i, t) * std::conj(snapshots.data(j, t));
      }
      std::sort(terms.begin(), terms.end(), before);
      Complex acc = 0.0;
      for (const Complex& v : terms) acc += v;
      acc /= static_cast<double>(n);
      c(i, j) = acc;
      c(j, i) = std::conj(acc);
    }
    c(i, i) = Complex(c(i, i).real(), 0.0);
  }
  return CovarianceEstimate(std::move(c), CovarianceKind::sample);
}

CovarianceEstimate forward_backward_average(const CovarianceEstimate& estimate) {
  const int m = estimate.dim();
  const CMatrix& r = estimate.matrix;
  CMatrix out(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      out(i, j) = 0.5 * (r(i, j) + std::conj(r(m - 1 - i, m - 1 - j)));
    }
  }
  return CovarianceEstimate(std::move(out), CovarianceKind::forward_backward);
}

SubspaceDecomposition eigendecompose(const CovarianceEstimate& estimate,
                                     int num_sources) {
  const int m = estimate.dim();
  if (num_sources < 1 || num_sources >= m) {
    throw invalid_argument("source count must lie in [1, M-1]");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(estimate.matrix);
  if (es.info() != Eigen::Success) {
    throw numerical_error(
        "covariance eigendecomposition failed (norm " +
        std::to_string(estimate.matrix.norm()) + ", trace " +
        std::to_string(estimate.matrix.trace().real()) + ")");
  }
  SubspaceDecomposition dec;
  dec.eigenvalues = es.eigenvalues();
  dec.noise_basis = es.eigenvectors().leftCols(m - num_sources);
  dec.signal_basis = es.eigenvectors().rightCols(num_sources);
  dec.signal_projector = projector(dec.signal_basis);
  dec.noise_projector = projector(dec.noise_basis);
  return dec;
}

CMatrix projector(const CMatrix& orthonormal_basis) {
  const int l = static_cast<int>(orthonormal_basis.cols());
  if (l < 1 || orthonormal_basis.rows() < l) {
    throw invalid_argument("projector basis has invalid shape");
  }
  const CMatrix gram = orthonormal_basis.adjoint() * orthonormal_basis;
  const double gap = (gram - CMatrix::Identity(l, l)).cwiseAbs().maxCoeff();
  if (gap > 1e-8) {
    throw invalid_argument("projector basis is not orthonormal (gap " +
                           std::to_string(gap) + ")");
  }
  return hermitized(orthonormal_basis * orthonormal_basis.adjoint());
}

}  // namespace doa
