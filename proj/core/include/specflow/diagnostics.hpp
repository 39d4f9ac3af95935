#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "specflow/field.hpp"
#include "specflow/models.hpp"

namespace specflow {

struct DiagnosticsRecord {
  double time = 0.0;
  std::optional<double> free_energy;
  double mean_value = 0.0;
  double max_abs = 0.0;
};

/// ||f - ref||_2 / N^dim. Throws ShapeError when the grids differ.
template <class Real>
double l2_error(const RealField<Real>& f, const RealField<Real>& ref);

/// Scalar observables of one snapshot. Throws NumericError on NaN/Inf.
DiagnosticsRecord record(const RealField<double>& f, const ModelSpec& model);

/// Shell-averaged |eta_k|^2 over uniform |k| bins of width max|k|/n_bins.
struct RadialSpectrum {
  std::vector<double> bin_centers;
  std::vector<double> power;        ///< mean |eta_k|^2 of the modes in each shell
  std::vector<std::size_t> counts;  ///< modes per shell (zero mode included in bin 0)
  double bin_width = 0.0;
  /// Power-weighted mean |k| inside the strongest shell, zero mode excluded.
  double dominant_k = 0.0;

  /// sum_k |eta_k|^2, recovered from the shells.
  double total_power() const;
};

/// 2D only; n_bins >= 8. 1D fields throw UnsupportedOperation.
RadialSpectrum radial_spectrum(const RealField<double>& f, int n_bins);

/// Angular distribution of spectral power on the shell |k| in
/// [k_center - half_width, k_center + half_width].
///
/// Sectors are rotated so the strongest mode sits at the centre of sector 0.
/// A stripe phase concentrates its power in two opposing sectors, a
/// hexagonal crystal in six.
struct AngularProfile {
  std::vector<double> sector_power;
  double reference_angle = 0.0;
  int significant_sectors = 0;  ///< sectors holding >= threshold * strongest sector
};

AngularProfile angular_profile(const RealField<double>& f, double k_center, double half_width,
                               int n_sectors = 12, double threshold = 0.2);

}  // namespace specflow
