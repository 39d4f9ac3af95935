#include "specflow/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "specflow/errors.hpp"
#include "specflow/fft.hpp"
#include "specflow/spectral.hpp"

namespace specflow {

template <class Real>
double l2_error(const RealField<Real>& f, const RealField<Real>& ref) {
  if (!same_geometry(f.grid, ref.grid) || f.size() != ref.size()) {
    throw ShapeError("l2_error: fields live on different grids");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double d = static_cast<double>(f.values[i]) - static_cast<double>(ref.values[i]);
    s += d * d;
  }
  return std::sqrt(s) / static_cast<double>(f.size());
}

template double l2_error(const RealField<float>&, const RealField<float>&);
template double l2_error(const RealField<double>&, const RealField<double>&);

DiagnosticsRecord record(const RealField<double>& f, const ModelSpec& model) {
  require_finite(f);
  DiagnosticsRecord r;
  r.time = f.time;
  r.mean_value = mean(f);
  r.max_abs = max_abs(f);
  if (model.has_free_energy()) r.free_energy = model.free_energy(f);
  return r;
}

double RadialSpectrum::total_power() const {
  double s = 0.0;
  for (std::size_t b = 0; b < power.size(); ++b) s += power[b] * static_cast<double>(counts[b]);
  return s;
}

RadialSpectrum radial_spectrum(const RealField<double>& f, int n_bins) {
  if (f.grid.dim != 2) throw UnsupportedOperation("radial_spectrum needs a 2D field");
  if (n_bins < 8) throw ConfigError("radial_spectrum needs at least 8 bins", "bins");

  const WavenumberTable ktab = wavenumbers(f.grid);
  const SpectralField<double> F = forward(f);

  double kmax2 = 0.0;
  for (int a = 0; a < 2; ++a) {
    double m = 0.0;
    for (double k : ktab.k_axis[a]) m = std::max(m, std::abs(k));
    kmax2 += m * m;
  }
  const double kmax = std::sqrt(kmax2);

  RadialSpectrum rs;
  rs.bin_width = kmax / n_bins;
  rs.bin_centers.resize(n_bins);
  rs.power.assign(n_bins, 0.0);
  rs.counts.assign(n_bins, 0);
  for (int b = 0; b < n_bins; ++b) rs.bin_centers[b] = (b + 0.5) * rs.bin_width;

  std::vector<double> shell_sum(n_bins, 0.0);
  std::vector<double> shell_sum_nz(n_bins, 0.0);  // zero mode excluded
  std::vector<double> shell_k_weighted(n_bins, 0.0);
  std::vector<std::size_t> count_nz(n_bins, 0);
  auto bin_of = [&](double k) {
    return std::min(static_cast<int>(k / rs.bin_width), n_bins - 1);
  };

  for (std::size_t m = 0; m < F.size(); ++m) {
    const double k = std::sqrt(ktab.k2[m]);
    const double p = std::norm(F.coeffs[m]);
    const int b = bin_of(k);
    shell_sum[b] += p;
    rs.counts[b] += 1;
    if (m != 0) {
      shell_sum_nz[b] += p;
      shell_k_weighted[b] += p * k;
      count_nz[b] += 1;
    }
  }
  int best = -1;
  double best_power = 0.0;
  for (int b = 0; b < n_bins; ++b) {
    if (rs.counts[b] > 0) rs.power[b] = shell_sum[b] / static_cast<double>(rs.counts[b]);
    if (count_nz[b] == 0) continue;
    const double avg = shell_sum_nz[b] / static_cast<double>(count_nz[b]);
    if (avg > best_power) {
      best_power = avg;
      best = b;
    }
  }
  rs.dominant_k = best >= 0 ? shell_k_weighted[best] / shell_sum_nz[best] : 0.0;
  return rs;
}

AngularProfile angular_profile(const RealField<double>& f, double k_center, double half_width,
                               int n_sectors, double threshold) {
  if (f.grid.dim != 2) throw UnsupportedOperation("angular_profile needs a 2D field");
  if (n_sectors < 2) throw ConfigError("angular_profile needs at least 2 sectors", "sectors");

  const WavenumberTable ktab = wavenumbers(f.grid);
  const SpectralField<double> F = forward(f);
  constexpr double two_pi = 2.0 * std::numbers::pi;

  struct Mode {
    double angle;
    double power;
  };
  std::vector<Mode> shell;
  for (std::size_t m = 1; m < F.size(); ++m) {
    const double k = std::sqrt(ktab.k2[m]);
    if (std::abs(k - k_center) > half_width) continue;
    double angle = std::atan2(ktab.k_component(1, m), ktab.k_component(0, m));
    if (angle < 0.0) angle += two_pi;
    shell.push_back({angle, std::norm(F.coeffs[m])});
  }

  AngularProfile prof;
  prof.sector_power.assign(n_sectors, 0.0);
  if (shell.empty()) return prof;

  const auto strongest = std::max_element(shell.begin(), shell.end(),
                                          [](const Mode& a, const Mode& b) { return a.power < b.power; });
  prof.reference_angle = strongest->angle;
  const double width = two_pi / n_sectors;
  for (const Mode& mode : shell) {
    double rel = std::fmod(mode.angle - prof.reference_angle + 0.5 * width + two_pi, two_pi);
    const int s = std::min(static_cast<int>(rel / width), n_sectors - 1);
    prof.sector_power[s] += mode.power;
  }
  const double top = *std::max_element(prof.sector_power.begin(), prof.sector_power.end());
  for (double p : prof.sector_power) {
    if (top > 0.0 && p >= threshold * top) ++prof.significant_sectors;
  }
  return prof;
}

}  // namespace specflow
