#include "specflow/phi.hpp"

#include <cmath>

namespace specflow {

namespace {
constexpr double kSeriesRadius = 1e-5;
}

double phi1(double z) {
  if (std::abs(z) < kSeriesRadius) {
    return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
  }
  return std::expm1(z) / z;
}

std::complex<double> expm1(std::complex<double> z) {
  const double x = z.real();
  const double y = z.imag();
  if (y == 0.0) return {std::expm1(x), 0.0};
  // Re(e^z - 1) = expm1(x) cos y - 2 sin^2(y/2)
  const double s = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * s * s;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

std::complex<double> phi1(std::complex<double> z) {
  if (z.imag() == 0.0) return {phi1(z.real()), 0.0};
  if (std::abs(z) < kSeriesRadius) {
    return 1.0 + z * (1.0 / 2.0 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
  }
  return expm1(z) / z;
}

}  // namespace specflow
