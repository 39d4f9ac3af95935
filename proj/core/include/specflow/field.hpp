#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "specflow/grid.hpp"

namespace specflow {

/// Order parameter sampled on the grid at a given simulation time.
template <class Real>
struct RealField {
  GridSpec grid;
  std::vector<Real> values;
  double time = 0.0;

  RealField() = default;
  explicit RealField(const GridSpec& g, double t = 0.0)
      : grid(g), values(g.total_points(), Real(0)), time(t) {}

  std::size_t size() const { return values.size(); }
  Real& operator[](std::size_t i) { return values[i]; }
  const Real& operator[](std::size_t i) const { return values[i]; }
};

/// Fourier coefficients in FFT ordering, full complex storage.
template <class Real>
struct SpectralField {
  GridSpec grid;
  std::vector<std::complex<Real>> coeffs;
  double time = 0.0;

  SpectralField() = default;
  explicit SpectralField(const GridSpec& g, double t = 0.0)
      : grid(g), coeffs(g.total_points()), time(t) {}

  std::size_t size() const { return coeffs.size(); }
  std::complex<Real>& operator[](std::size_t i) { return coeffs[i]; }
  const std::complex<Real>& operator[](std::size_t i) const { return coeffs[i]; }
};

/// Throws NumericError if any value is NaN or infinite.
template <class Real>
void require_finite(const RealField<Real>& f);

template <class To, class From>
RealField<To> convert(const RealField<From>& f) {
  RealField<To> out;
  out.grid = f.grid;
  out.time = f.time;
  out.values.assign(f.values.begin(), f.values.end());
  return out;
}

/// Arithmetic mean over the grid points.
template <class Real>
double mean(const RealField<Real>& f);

template <class Real>
double max_abs(const RealField<Real>& f);

}  // namespace specflow
