#pragma once

#include <utility>
#include <vector>

#include "doa/subspace.hpp"

namespace doa {

/// The M-1 polynomial roots kept on or inside the unit circle, ordered by
/// descending magnitude (closest to the circle first).
struct RootSet {
  std::vector<Complex> roots;
  std::vector<double> magnitudes;
  std::vector<double> angles;

  int size() const { return static_cast<int>(roots.size()); }
};

/// Direction estimates plus the roots they were read from.
struct DoaEstimate {
  std::vector<double> thetas;  // radians, ascending
  std::vector<Complex> source_roots;
};

struct RootSelection {
  RootSet set;
  std::vector<Complex> picks;  // the K largest-magnitude kept roots
};

struct RootMusicResult {
  DoaEstimate estimate;
  RootSet roots;
};

/// Coefficients (ascending powers, length 2M-1) of the null-spectrum
/// polynomial z^(M-1) * a^T(1/z) G G^H a(z). Coefficient of z^(M-1+l) is the
/// sum of the l-th diagonal of G G^H; conjugate symmetry is enforced exactly.
CVector null_spectrum_polynomial(const CMatrix& noise_basis);

/// All roots of a polynomial given by ascending coefficients, via the
/// balanced companion matrix. Each root is residual-checked.
std::vector<Complex> polynomial_roots(const CVector& coefficients);

/// Splits the 2(M-1) roots into conjugate-reciprocal pairs and keeps the
/// member on or inside the unit circle from each pair. Near-circle double
/// roots are replaced by the pair mean, which is second-order accurate.
RootSelection select_inside_and_closest(const std::vector<Complex>& roots,
                                        int num_sources);

/// Maps roots to directions: theta = asin(clamp(arg(z) / (2 pi d/lambda))).
DoaEstimate roots_to_doas(const std::vector<Complex>& selected_roots,
                          const ArrayGeometry& geometry);

/// Polynomial pipeline from an explicit noise basis.
RootSelection root_selection_from_noise_basis(const CMatrix& noise_basis,
                                              int num_sources);

/// Full pipeline: eigendecompose, root, select, map to directions.
RootMusicResult root_music(const CovarianceEstimate& covariance,
                           int num_sources, const ArrayGeometry& geometry);

}  // namespace doa
