#include "specflow/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>

#include "specflow/errors.hpp"

namespace specflow {

namespace {

// The FFTW planner is not thread safe; execution on distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

template <class Real>
struct Fftw;

template <>
struct Fftw<double> {
  using plan = fftw_plan;
  using complex = fftw_complex;
  static complex* alloc(std::size_t n) { return fftw_alloc_complex(n); }
  static void free(void* p) { fftw_free(p); }
  static plan plan_dft(int rank, const int* n, complex* in, complex* out, int sign) {
    return fftw_plan_dft(rank, n, in, out, sign, FFTW_ESTIMATE);
  }
  static void execute(plan p) { fftw_execute(p); }
  static void destroy(plan p) { fftw_destroy_plan(p); }
};

template <>
struct Fftw<float> {
  using plan = fftwf_plan;
  using complex = fftwf_complex;
  static complex* alloc(std::size_t n) { return fftwf_alloc_complex(n); }
  static void free(void* p) { fftwf_free(p); }
  static plan plan_dft(int rank, const int* n, complex* in, complex* out, int sign) {
    return fftwf_plan_dft(rank, n, in, out, sign, FFTW_ESTIMATE);
  }
  static void execute(plan p) { fftwf_execute(p); }
  static void destroy(plan p) { fftwf_destroy_plan(p); }
};

}  // namespace

template <class Real>
struct Fft<Real>::Impl {
  using Api = Fftw<Real>;

  std::size_t n = 0;
  Real scale = 1;
  typename Api::complex* in = nullptr;
  typename Api::complex* out = nullptr;
  typename Api::plan fwd = nullptr;
  typename Api::plan bwd = nullptr;

  explicit Impl(const GridSpec& grid) {
    validate(grid);
    n = grid.total_points();
    scale = Real(1) / static_cast<Real>(n);
    int dims[2] = {static_cast<int>(grid.n[0]), static_cast<int>(grid.n[1])};
    std::lock_guard lock(planner_mutex());
    in = Api::alloc(n);
    out = Api::alloc(n);
    fwd = Api::plan_dft(grid.dim, dims, in, out, FFTW_FORWARD);
    bwd = Api::plan_dft(grid.dim, dims, in, out, FFTW_BACKWARD);
    if (!in || !out || !fwd || !bwd) throw Error("FFTW plan creation failed");
  }

  ~Impl() {
    std::lock_guard lock(planner_mutex());
    if (fwd) Api::destroy(fwd);
    if (bwd) Api::destroy(bwd);
    Api::free(in);
    Api::free(out);
  }

  Complex* in_c() { return reinterpret_cast<Complex*>(in); }
  const Complex* out_c() const { return reinterpret_cast<const Complex*>(out); }

  void check(std::size_t a, std::size_t b) const {
    if (a != n || b != n) throw ShapeError("FFT buffer size does not match the plan");
  }
};

template <class Real>
Fft<Real>::Fft(const GridSpec& grid) : impl_(std::make_unique<Impl>(grid)) {}
template <class Real>
Fft<Real>::~Fft() = default;
template <class Real>
Fft<Real>::Fft(Fft&&) noexcept = default;
template <class Real>
Fft<Real>& Fft<Real>::operator=(Fft&&) noexcept = default;

template <class Real>
std::size_t Fft<Real>::size() const noexcept {
  return impl_->n;
}

template <class Real>
void Fft<Real>::forward(std::span<const Real> in, std::span<Complex> out) {
  impl_->check(in.size(), out.size());
  Complex* buf = impl_->in_c();
  for (std::size_t i = 0; i < impl_->n; ++i) buf[i] = Complex(in[i], Real(0));
  Impl::Api::execute(impl_->fwd);
  std::copy_n(impl_->out_c(), impl_->n, out.begin());
}

template <class Real>
void Fft<Real>::forward(std::span<const Complex> in, std::span<Complex> out) {
  impl_->check(in.size(), out.size());
  std::copy_n(in.begin(), impl_->n, impl_->in_c());
  Impl::Api::execute(impl_->fwd);
  std::copy_n(impl_->out_c(), impl_->n, out.begin());
}

template <class Real>
void Fft<Real>::inverse(std::span<const Complex> in, std::span<Real> out) {
  impl_->check(in.size(), out.size());
  std::copy_n(in.begin(), impl_->n, impl_->in_c());
  Impl::Api::execute(impl_->bwd);
  const Complex* res = impl_->out_c();
  const Real s = impl_->scale;
  for (std::size_t i = 0; i < impl_->n; ++i) out[i] = res[i].real() * s;
}

template <class Real>
void Fft<Real>::inverse(std::span<const Complex> in, std::span<Complex> out) {
  impl_->check(in.size(), out.size());
  std::copy_n(in.begin(), impl_->n, impl_->in_c());
  Impl::Api::execute(impl_->bwd);
  const Complex* res = impl_->out_c();
  const Real s = impl_->scale;
  for (std::size_t i = 0; i < impl_->n; ++i) out[i] = res[i] * s;
}

template <class Real>
SpectralField<Real> forward(const RealField<Real>& f) {
  require_finite(f);
  SpectralField<Real> F(f.grid, f.time);
  Fft<Real> fft(f.grid);
  fft.forward(std::span<const Real>(f.values), std::span(F.coeffs));
  return F;
}

template <class Real>
RealField<Real> inverse(const SpectralField<Real>& F) {
  for (const auto& c : F.coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw NumericError("non-finite spectral coefficient");
    }
  }
  RealField<Real> f(F.grid, F.time);
  Fft<Real> fft(F.grid);
  fft.inverse(std::span<const std::complex<Real>>(F.coeffs), std::span(f.values));
  return f;
}

template class Fft<float>;
template class Fft<double>;
template SpectralField<float> forward(const RealField<float>&);
template SpectralField<double> forward(const RealField<double>&);
template RealField<float> inverse(const SpectralField<float>&);
template RealField<double> inverse(const SpectralField<double>&);

}  // namespace specflow
