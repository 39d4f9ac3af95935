#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "specflow/field.hpp"
#include "specflow/grid.hpp"

namespace specflow {

/// Fourier-space mirror of a GridSpec.
///
/// k_axis[a][m] = 2*pi*n/L_a with n = m for m < N/2 and n = m - N otherwise
/// (standard FFT ordering). The 2/3-rule mask keeps a mode iff
/// |k_a| < (2/3) * max(k_axis[a]) on every axis.
struct WavenumberTable {
  GridSpec grid;
  std::array<std::vector<double>, 2> k_axis;
  std::vector<double> k2;
  std::vector<std::uint8_t> dealias_mask;
  std::array<double, 2> k_cut{0.0, 0.0};

  std::size_t size() const { return k2.size(); }
  /// Component of the wavevector along `axis` at a flattened mode index.
  double k_component(int axis, std::size_t mode) const;
};

WavenumberTable wavenumbers(const GridSpec& grid);

/// Multiplies each mode by (ik)^order in 1D or (-k^2)^(order/2) in 2D.
/// Odd orders are only available in 1D; 2D throws UnsupportedOperation.
template <class Real>
SpectralField<Real> spectral_derivative(const SpectralField<Real>& F, int order,
                                        const WavenumberTable& ktab);

template <class Real>
SpectralField<Real> spectral_derivative(const SpectralField<Real>& F, int order) {
  return spectral_derivative(F, order, wavenumbers(F.grid));
}

}  // namespace specflow
