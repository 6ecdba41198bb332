#include "doa/array_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "doa/random.hpp"
#include "doa/root_music.hpp"
#include "doa/subspace.hpp"

namespace doa {

namespace {

constexpr double kPi = std::numbers::pi;

void check_theta(double theta) {
  if (!(std::abs(theta) <= kPi / 2.0)) {
    throw invalid_argument("direction must lie in [-pi/2, pi/2], got " +
                           std::to_string(theta));
  }
}

/// Factor F with F F^H = S. Cholesky when S is positive definite, eigen
/// factor otherwise (r = 1 sources make S merely semidefinite).
CMatrix source_covariance_factor(const CMatrix& s) {
  Eigen::LLT<CMatrix> llt(s);
  if (llt.info() == Eigen::Success) {
    return llt.matrixL();
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(s);
  if (es.info() != Eigen::Success) {
    throw numerical_error("source covariance eigendecomposition failed");
  }
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw numerical_error("source covariance is not positive semidefinite");
  }
  RVector clipped = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * clipped.asDiagonal();
}

}  // namespace

ArrayGeometry::ArrayGeometry(int num_sensors_, double spacing_ratio_)
    : num_sensors(num_sensors_), spacing_ratio(spacing_ratio_) {
  if (num_sensors < 2) {
    throw invalid_argument("array needs at least two sensors");
  }
  if (!(spacing_ratio > 0.0 && spacing_ratio <= 0.5)) {
    throw invalid_argument("sensor spacing must lie in (0, 0.5] wavelengths");
  }
}

double ArrayGeometry::omega_of(double theta) const {
  return 2.0 * kPi * spacing_ratio * std::sin(theta);
}

double ArrayGeometry::theta_of_omega(double omega) const {
  const double s = omega / (2.0 * kPi * spacing_ratio);
  return std::asin(std::clamp(s, -1.0, 1.0));
}

SourceScenario::SourceScenario(ArrayGeometry geometry_,
                               std::vector<double> doas_,
                               CMatrix source_covariance_, double noise_power_,
                               int num_snapshots_)
    : geometry(geometry_),
      doas(std::move(doas_)),
      source_covariance(std::move(source_covariance_)),
      noise_power(noise_power_),
      num_snapshots(num_snapshots_) {
  const int k = num_sources();
  if (k < 1) throw invalid_argument("scenario needs at least one source");
  if (k >= geometry.num_sensors) {
    throw invalid_argument("scenario needs fewer sources than sensors");
  }
  for (int i = 0; i < k; ++i) {
    check_theta(doas[i]);
    if (i > 0 && !(doas[i] > doas[i - 1])) {
      throw invalid_argument("source directions must be strictly ascending");
    }
  }
  if (source_covariance.rows() != k || source_covariance.cols() != k) {
    throw invalid_argument("source covariance has the wrong size");
  }
  const double herm_gap =
      (source_covariance - source_covariance.adjoint()).cwiseAbs().maxCoeff();
  if (herm_gap > 1e-12 * std::max(1.0, source_covariance.cwiseAbs().maxCoeff())) {
    throw invalid_argument("source covariance must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es(source_covariance,
                                            Eigen::EigenvaluesOnly);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  if (es.eigenvalues().minCoeff() < -1e-12 * scale) {
    throw invalid_argument("source covariance must be positive semidefinite");
  }
  if (!(noise_power >= 0.0)) {
    throw invalid_argument("noise power must be nonnegative");
  }
  if (num_snapshots < 1) {
    throw invalid_argument("scenario needs at least one snapshot");
  }
}

SnapshotSet::SnapshotSet(CMatrix data_) : data(std::move(data_)) {
  if (data.rows() < 1 || data.cols() < 1) {
    throw invalid_argument("snapshot set must be nonempty");
  }
  if (!data.allFinite()) {
    throw invalid_argument("snapshot set contains non-finite entries");
  }
}

CVector steering_vector(const ArrayGeometry& geometry, double theta) {
  check_theta(theta);
  const double omega = geometry.omega_of(theta);
  CVector a(geometry.num_sensors);
  for (int m = 0; m < geometry.num_sensors; ++m) {
    a(m) = std::polar(1.0, -omega * m);
  }
  return a;
}

CVector steering_derivative(const ArrayGeometry& geometry, double theta) {
  check_theta(theta);
  const double omega = geometry.omega_of(theta);
  CVector a1(geometry.num_sensors);
  for (int m = 0; m < geometry.num_sensors; ++m) {
    a1(m) = -static_cast<double>(m) * std::polar(1.0, -omega * m);
  }
  return a1;
}

CMatrix steering_matrix(const ArrayGeometry& geometry,
                        const std::vector<double>& thetas) {
  CMatrix a(geometry.num_sensors, thetas.size());
  for (int k = 0; k < static_cast<int>(thetas.size()); ++k) {
    a.col(k) = steering_vector(geometry, thetas[k]);
  }
  return a;
}

CMatrix true_covariance(const SourceScenario& scenario) {
  const CMatrix a = steering_matrix(scenario.geometry, scenario.doas);
  CMatrix r = a * scenario.source_covariance * a.adjoint();
  r.diagonal().array() += scenario.noise_power;
  return hermitized(r);
}

SnapshotSet generate_snapshots(const SourceScenario& scenario,
                               std::uint64_t seed) {
  const int m = scenario.geometry.num_sensors;
  const int k = scenario.num_sources();
  const int n = scenario.num_snapshots;
  const CMatrix a = steering_matrix(scenario.geometry, scenario.doas);
  const CMatrix factor = source_covariance_factor(scenario.source_covariance);
  const double noise_amp = std::sqrt(scenario.noise_power);

  NormalSource rng(seed);
  CMatrix x(m, n);
  CVector w(k);
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < k; ++i) w(i) = rng.next_complex();
    x.col(t) = a * (factor * w);
    for (int i = 0; i < m; ++i) x(i, t) += noise_amp * rng.next_complex();
  }
  return SnapshotSet(std::move(x));
}

TrueModel true_subspace_model(const SourceScenario& scenario) {
  const int m = scenario.geometry.num_sensors;
  const int k = scenario.num_sources();
  CMatrix r = true_covariance(scenario);

  Eigen::SelfAdjointEigenSolver<CMatrix> es(r);
  if (es.info() != Eigen::Success) {
    throw numerical_error("eigendecomposition of the exact covariance failed");
  }
  const RVector& lambda = es.eigenvalues();
  for (int i = m - k; i < m; ++i) {
    if (lambda(i) - scenario.noise_power <= 1e-9) {
      throw numerical_error(
          "signal eigenvalue is degenerate with the noise power; the "
          "signal-space pseudo-inverse is undefined");
    }
  }

  TrueModel model{scenario.geometry,
                  scenario.doas,
                  {},
                  scenario.noise_power,
                  k,
                  std::move(r),
                  lambda,
                  es.eigenvectors().rightCols(k),
                  es.eigenvectors().leftCols(m - k),
                  CMatrix(),
                  CMatrix(),
                  CMatrix(),
                  CMatrix(),
                  {}};
  model.omegas.reserve(k);
  for (double theta : scenario.doas) {
    model.omegas.push_back(scenario.geometry.omega_of(theta));
  }
  model.signal_projector = projector(model.signal_basis);
  model.noise_projector = projector(model.noise_basis);

  CMatrix v = model.covariance;
  v.diagonal().array() -= scenario.noise_power;
  model.v_matrix = hermitized(v);

  CMatrix v_dag = CMatrix::Zero(m, m);
  for (int i = 0; i < k; ++i) {
    const CVector e = model.signal_basis.col(i);
    v_dag += e * e.adjoint() / (lambda(m - k + i) - scenario.noise_power);
  }
  model.v_pseudoinverse = hermitized(v_dag);

  const RootSelection sel =
      root_selection_from_noise_basis(model.noise_basis, k);
  model.true_roots = sel.set.roots;
  return model;
}

}  // namespace doa
