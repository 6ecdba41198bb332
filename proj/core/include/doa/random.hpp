#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace doa {

/// One splitmix64 step.
std::uint64_t split_mix(std::uint64_t x);

/// Derives an independent child seed from a base seed and stream indices.
/// Pure function of its inputs, so derived streams are reproducible no
/// matter where or in which order they are consumed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0);

/// Deterministic Gaussian source. Uniform doubles are built explicitly from
/// the mt19937_64 output and pushed through Box-Muller, so the stream does
/// not depend on the standard library's distribution internals.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  /// Standard real normal N(0, 1).
  double next();

  /// Circularly-symmetric complex normal with unit total variance:
  /// real and imaginary parts are independent N(0, 1/2).
  std::complex<double> next_complex();

 private:
  double uniform();  // in (0, 1]

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace doa
