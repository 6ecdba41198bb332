#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "doa/errors.hpp"

namespace doa {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Uniform linear array: element count and element spacing in wavelengths.
struct ArrayGeometry {
  int num_sensors;
  double spacing_ratio;  // d / lambda

  ArrayGeometry(int num_sensors, double spacing_ratio);

  /// Electrical angle of a plane wave from direction theta (radians).
  double omega_of(double theta) const;

  /// Inverse of omega_of; the sine argument is clamped to [-1, 1] so noisy
  /// near-endfire angles map to +-pi/2 instead of failing.
  double theta_of_omega(double omega) const;
};

/// Ground-truth generative model: K plane waves with source covariance S
/// in spatially white noise, observed over N snapshots.
struct SourceScenario {
  ArrayGeometry geometry;
  std::vector<double> doas;   // radians, strictly ascending
  CMatrix source_covariance;  // K x K Hermitian PSD
  double noise_power;
  int num_snapshots;

  SourceScenario(ArrayGeometry geometry, std::vector<double> doas,
                 CMatrix source_covariance, double noise_power,
                 int num_snapshots);

  int num_sources() const { return static_cast<int>(doas.size()); }
};

/// One block of array observations; column t is the snapshot x(t).
struct SnapshotSet {
  CMatrix data;

  explicit SnapshotSet(CMatrix data);

  int num_sensors() const { return static_cast<int>(data.rows()); }
  int num_snapshots() const { return static_cast<int>(data.cols()); }
};

/// Exact second-order description of a scenario: covariance, eigenstructure,
/// projectors, the signal-space pseudo-inverse used by the perturbation
/// formulas, and the exact polynomial roots.
struct TrueModel {
  ArrayGeometry geometry;
  std::vector<double> doas;
  std::vector<double> omegas;
  double noise_power;
  int num_sources;

  CMatrix covariance;
  RVector eigenvalues;  // ascending
  CMatrix signal_basis;
  CMatrix noise_basis;
  CMatrix signal_projector;
  CMatrix noise_projector;
  CMatrix v_matrix;         // covariance minus the noise floor
  CMatrix v_pseudoinverse;  // pseudo-inverse of v_matrix on the signal space
  std::vector<Complex> true_roots;  // M-1 roots, descending magnitude
};

/// Array response for a source at theta; element m has phase -m*omega.
CVector steering_vector(const ArrayGeometry& geometry, double theta);

/// The vector a1 with elements -m*exp(-j*m*omega); satisfies
/// d a / d omega = j * a1.
CVector steering_derivative(const ArrayGeometry& geometry, double theta);

/// Columns are steering vectors of the given directions.
CMatrix steering_matrix(const ArrayGeometry& geometry,
                        const std::vector<double>& thetas);

/// Exact covariance A S A^H + noise_power * I, Hermitian by construction.
CMatrix true_covariance(const SourceScenario& scenario);

/// Synthesizes N snapshots with complex Gaussian sources and noise.
/// Identical (scenario, seed) pairs produce bit-identical output.
SnapshotSet generate_snapshots(const SourceScenario& scenario,
                               std::uint64_t seed);

/// Full eigen description of the exact covariance. Rejects scenarios whose
/// smallest signal eigenvalue is within 1e-9 of the noise power, since the
/// signal-space pseudo-inverse blows up there.
TrueModel true_subspace_model(const SourceScenario& scenario);

}  // namespace doa
