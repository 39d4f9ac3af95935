#include "specflow/field.hpp"

#include <cmath>

#include "specflow/errors.hpp"

namespace specflow {

template <class Real>
void require_finite(const RealField<Real>& f) {
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (!std::isfinite(f.values[i])) {
      throw NumericError("non-finite field value at index " + std::to_string(i));
    }
  }
}

template <class Real>
double mean(const RealField<Real>& f) {
  if (f.values.empty()) return 0.0;
  double s = 0.0;
  for (Real v : f.values) s += static_cast<double>(v);
  return s / static_cast<double>(f.values.size());
}

template <class Real>
double max_abs(const RealField<Real>& f) {
  double m = 0.0;
  for (Real v : f.values) m = std::max(m, std::abs(static_cast<double>(v)));
  return m;
}

template void require_finite(const RealField<float>&);
template void require_finite(const RealField<double>&);
template double mean(const RealField<float>&);
template double mean(const RealField<double>&);
template double max_abs(const RealField<float>&);
template double max_abs(const RealField<double>&);

}  // namespace specflow
