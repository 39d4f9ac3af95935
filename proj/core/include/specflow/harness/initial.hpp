#pragma once

#include <cstdint>
#include <random>

#include "specflow/field.hpp"
#include "specflow/harness/config.hpp"

namespace specflow::harness {

/// Standard-normal deviates from a seeded std::mt19937_64.
///
/// The Gaussian transform is Box-Muller on 53-bit uniforms:
///   u1 = ((b1 >> 11) + 1) * 2^-53 in (0, 1]
///   u2 = (b2 >> 11) * 2^-53       in [0, 1)
///   z0 = sqrt(-2 ln u1) cos(2 pi u2), z1 = sqrt(-2 ln u1) sin(2 pi u2)
/// returned in that order. A seed yields the same sequence with any standard library.
class NormalGenerator {
public:
  explicit NormalGenerator(std::uint64_t seed) : engine_(seed) {}
  double operator()();

private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

/// Samples the initial condition on the grid. Noise is drawn point by point
/// in storage order (row-major), so a seed fixes the field bit for bit.
///
///   uniform_noise  eta0 + noise_amp * N(0,1)
///   top_hat        intensity on [x0, x0 + width) along axis 0, else 0
///   gaussian_bump  eta0 + amplitude * exp(-10 ((x - center)/2)^2), axis 0
///   cosine_probe   eta0 + epsilon * cos(k0 x), axis 0
/// noise_amp also perturbs the deterministic kinds when it is non-zero.
RealField<double> build_initial(const InitialConditionSpec& ic, const GridSpec& grid,
                                std::uint64_t seed);

}  // namespace specflow::harness
