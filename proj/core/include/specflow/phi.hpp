#pragma once

#include <complex>

namespace specflow {

/// phi_1(z) = (e^z - 1)/z with phi_1(0) = 1.
///
/// Uses a four-term Taylor polynomial for |z| < 1e-5 and an expm1-based
/// quotient otherwise, so there is no catastrophic cancellation near 0.
double phi1(double z);
std::complex<double> phi1(std::complex<double> z);

/// e^z - 1 for complex z without cancellation near the origin.
std::complex<double> expm1(std::complex<double> z);

}  // namespace specflow
