#pragma once

#include "doa/array_model.hpp"

namespace doa {

enum class CovarianceKind { sample, forward_backward, modified_step2 };

/// Exact Hermitian average (m + m^H) / 2. Idempotent at the bit level.
CMatrix hermitized(const CMatrix& m);

/// Anti-identity (exchange) matrix of size m.
CMatrix exchange_matrix(int m);

/// A covariance estimate; symmetrized on construction so every consumer can
/// rely on exactly Hermitian input.
struct CovarianceEstimate {
  CMatrix matrix;
  CovarianceKind kind;

  CovarianceEstimate(CMatrix matrix, CovarianceKind kind);

  int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Sorted eigen-subspaces of a covariance estimate.
struct SubspaceDecomposition {
  RVector eigenvalues;  // ascending
  CMatrix noise_basis;
  CMatrix signal_basis;
  CMatrix signal_projector;
  CMatrix noise_projector;
};

/// (1/N) sum of x(t) x(t)^H. Per-entry accumulation runs in value-sorted
/// order, so the result is invariant under permutations of the snapshot
/// columns at the bit level.
CovarianceEstimate sample_covariance(const SnapshotSet& snapshots);

/// (R + J R* J) / 2 with J the exchange matrix. The output is persymmetric;
/// applying the average twice equals applying it once exactly.
CovarianceEstimate forward_backward_average(const CovarianceEstimate& estimate);

/// Eigen-subspaces with the smallest M-K eigenpairs as the noise side.
SubspaceDecomposition eigendecompose(const CovarianceEstimate& estimate,
                                     int num_sources);

/// B B^H for a matrix with orthonormal columns.
CMatrix projector(const CMatrix& orthonormal_basis);

}  // namespace doa
