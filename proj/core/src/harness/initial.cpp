#include "specflow/harness/initial.hpp"

#include <cmath>
#include <numbers>

namespace specflow::harness {

double NormalGenerator::operator()() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  constexpr double scale = 0x1.0p-53;
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * scale;
  const double u2 = static_cast<double>(engine_() >> 11) * scale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

RealField<double> build_initial(const InitialConditionSpec& ic, const GridSpec& grid,
                                std::uint64_t seed) {
  validate(grid);
  RealField<double> f(grid, 0.0);
  const std::size_t ny = grid.dim == 2 ? grid.n[1] : 1;

  auto x_of = [&](std::size_t flat) { return grid.coordinate(0, flat / ny); };

  switch (ic.kind) {
    case InitialKind::UniformNoise:
      for (auto& v : f.values) v = ic.eta0;
      break;
    case InitialKind::TopHat: {
      const double x0 = ic.extra_or("x0", grid.origin[0]);
      const double width = ic.extra_or("width", 0.2);
      const double intensity = ic.extra_or("intensity", 1.0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = x_of(i);
        f[i] = (x >= x0 && x < x0 + width) ? intensity : 0.0;
      }
      break;
    }
    case InitialKind::GaussianBump: {
      const double amplitude = ic.extra_or("amplitude", 1.0);
      const double center = ic.extra_or("center", 0.0);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const double s = (x_of(i) - center) / 2.0;
        f[i] = ic.eta0 + amplitude * std::exp(-10.0 * s * s);
      }
      break;
    }
    case InitialKind::CosineProbe: {
      const double eps = ic.extra_or("epsilon", 0.01);
      const double k0 = ic.extra_or("k0", 1.0);
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = ic.eta0 + eps * std::cos(k0 * x_of(i));
      break;
    }
  }

  if (ic.noise_amp > 0.0) {
    NormalGenerator normal(seed);
    for (auto& v : f.values) v += ic.noise_amp * normal();
  }
  return f;
}

}  // namespace specflow::harness
