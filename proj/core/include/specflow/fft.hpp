#pragma once

#include <complex>
#include <memory>
#include <span>

#include "specflow/field.hpp"
#include "specflow/grid.hpp"

namespace specflow {

/// Complex-to-complex FFT pair bound to one grid shape, backed by FFTW.
///
/// Forward is unnormalized, inverse carries the 1/N^dim factor, so a field
/// whose only coefficient is c at the zero mode inverts to the constant
/// c/N^dim. Plans are made with FFTW_ESTIMATE: repeated runs execute the same
/// code path and give bit-identical output. Plan creation is serialized
/// internally; a single Fft object must not be shared between threads.
template <class Real>
class Fft {
public:
  using Complex = std::complex<Real>;

  explicit Fft(const GridSpec& grid);
  ~Fft();
  Fft(Fft&&) noexcept;
  Fft& operator=(Fft&&) noexcept;
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const noexcept;

  void forward(std::span<const Real> in, std::span<Complex> out);
  void forward(std::span<const Complex> in, std::span<Complex> out);
  /// Inverse transform keeping the real part.
  void inverse(std::span<const Complex> in, std::span<Real> out);
  void inverse(std::span<const Complex> in, std::span<Complex> out);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot transforms. Throw NumericError on non-finite input.
template <class Real>
SpectralField<Real> forward(const RealField<Real>& f);

template <class Real>
RealField<Real> inverse(const SpectralField<Real>& F);

}  // namespace specflow
