#include "specflow/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "specflow/errors.hpp"

namespace specflow {

double WavenumberTable::k_component(int axis, std::size_t mode) const {
  if (grid.dim == 1) return axis == 0 ? k_axis[0][mode] : 0.0;
  const std::size_t ny = grid.n[1];
  return axis == 0 ? k_axis[0][mode / ny] : k_axis[1][mode % ny];
}

WavenumberTable wavenumbers(const GridSpec& grid) {
  validate(grid);
  WavenumberTable t;
  t.grid = grid;
  for (int a = 0; a < grid.dim; ++a) {
    const std::size_t n = grid.n[a];
    const auto half = static_cast<std::int64_t>(n / 2);
    auto& k = t.k_axis[a];
    k.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
      const auto idx = static_cast<std::int64_t>(m);
      const std::int64_t signed_index = idx < half ? idx : idx - static_cast<std::int64_t>(n);
      k[m] = 2.0 * std::numbers::pi * static_cast<double>(signed_index) / grid.length[a];
    }
    t.k_cut[a] = (2.0 / 3.0) * *std::max_element(k.begin(), k.end());
  }

  const std::size_t total = grid.total_points();
  t.k2.resize(total);
  t.dealias_mask.resize(total);
  if (grid.dim == 1) {
    for (std::size_t m = 0; m < total; ++m) {
      const double kx = t.k_axis[0][m];
      t.k2[m] = kx * kx;
      t.dealias_mask[m] = std::abs(kx) < t.k_cut[0];
    }
  } else {
    const std::size_t nx = grid.n[0], ny = grid.n[1];
    for (std::size_t i = 0; i < nx; ++i) {
      const double kx = t.k_axis[0][i];
      for (std::size_t j = 0; j < ny; ++j) {
        const double ky = t.k_axis[1][j];
        const std::size_t m = i * ny + j;
        t.k2[m] = kx * kx + ky * ky;
        t.dealias_mask[m] = std::abs(kx) < t.k_cut[0] && std::abs(ky) < t.k_cut[1];
      }
    }
  }
  return t;
}

template <class Real>
SpectralField<Real> spectral_derivative(const SpectralField<Real>& F, int order,
                                        const WavenumberTable& ktab) {
  if (order < 0) throw UnsupportedOperation("derivative order must be non-negative");
  if (!same_geometry(F.grid, ktab.grid)) {
    throw ShapeError("wavenumber table does not match the field grid");
  }
  SpectralField<Real> out = F;
  if (order == 0) return out;

  if (F.grid.dim == 1) {
    // Repeated multiplication by ik.
    for (std::size_t m = 0; m < out.size(); ++m) {
      const Real k = static_cast<Real>(ktab.k_axis[0][m]);
      auto c = out.coeffs[m];
      for (int p = 0; p < order; ++p) c = {-c.imag() * k, c.real() * k};
      out.coeffs[m] = c;
    }
    return out;
  }

  if (order % 2 != 0) {
    throw UnsupportedOperation("odd derivative order " + std::to_string(order) +
                               " is not available on 2D grids");
  }
  for (std::size_t m = 0; m < out.size(); ++m) {
    const Real lap = -static_cast<Real>(ktab.k2[m]);
    auto c = out.coeffs[m];
    for (int p = 0; p < order / 2; ++p) c *= lap;
    out.coeffs[m] = c;
  }
  return out;
}

template SpectralField<float> spectral_derivative(const SpectralField<float>&, int,
                                                  const WavenumberTable&);
template SpectralField<double> spectral_derivative(const SpectralField<double>&, int,
                                                   const WavenumberTable&);

}  // namespace specflow
