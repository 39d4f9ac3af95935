#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "specflow/fft.hpp"
#include "specflow/field.hpp"
#include "specflow/models.hpp"
#include "specflow/spectral.hpp"

namespace specflow {

enum class Method { Imex, IntegratingFactor, Etd };

/// Accepts "imex", "if", "etd" (case-insensitive). Anything else is a
/// ConfigError keyed on time.method whose message lists the valid names.
Method parse_method(std::string_view name);
std::string_view to_string(Method m);
inline constexpr std::array<Method, 3> kAllMethods = {Method::Imex, Method::IntegratingFactor,
                                                      Method::Etd};

/// Per-mode marching multipliers for one (method, h, model, grid):
///   eta_k <- eta_k * t_linear_k + N_k(eta) * t_non_k
///
///   IMEX  t_linear = 1/(1 - hL)   t_non = mask * h/(1 - hL)
///   IF    t_linear = e^{hL}       t_non = mask * h * e^{hL}
///   ETD   t_linear = e^{hL}       t_non = mask * h * phi1(hL)
struct SchemeTables {
  Method method = Method::Etd;
  double h = 0.0;
  std::vector<std::complex<double>> t_linear;
  std::vector<std::complex<double>> t_non;
  /// h * max_k |L_k|. Values >= 1 mean the IMEX accuracy bound h|L| < 1 is violated.
  double stiffness_metric = 0.0;

  bool exceeds_imex_bound() const { return stiffness_metric >= 1.0; }
};

SchemeTables build_scheme(Method method, double h, const ModelSpec& model,
                          const WavenumberTable& ktab);

template <class Real>
struct StepperState {
  SpectralField<Real> spectral;
  RealField<Real> real_view;
  std::int64_t step_index = 0;
  double time = 0.0;
};

/// Advances one simulation with precomputed scheme tables.
///
/// Each step evaluates the nonlinear term on the current real-space field,
/// applies the tables in Fourier space and refreshes the real-space view.
/// A step that produces NaN/Inf or max|eta| > kDivergenceThreshold throws
/// DivergenceError; the state then holds the offending field.
template <class Real>
class Stepper {
public:
  static constexpr double kDivergenceThreshold = 1e8;

  Stepper(const ModelSpec& model, const SchemeTables& tables, const RealField<Real>& initial);

  void step();
  void advance(std::int64_t steps);

  const StepperState<Real>& state() const { return state_; }
  double h() const { return h_; }

private:
  using Complex = std::complex<Real>;

  double h_;
  double t0_;
  Fft<Real> fft_;
  std::vector<Complex> t_linear_;
  std::vector<Complex> t_non_;
  std::vector<Complex> multiplier_;
  std::vector<double> poly_;
  std::vector<Real> pointwise_;
  std::vector<Complex> nonlinear_;
  StepperState<Real> state_;
};

struct LimitConsistencyRow {
  double h = 0.0;
  double linear_gap = 0.0;     ///< max_k |t_linear(IF) - t_linear(IMEX)|
  double nonlinear_gap = 0.0;  ///< max_k |t_non(ETD) - t_non(IMEX)|
  double zero_mode_gap = 0.0;  ///< largest table difference at the zero mode
};

struct LimitConsistencyReport {
  std::vector<LimitConsistencyRow> rows;
  /// gap(h_i) / gap(h_{i+1}); ~ (h_i/h_{i+1})^2 once h|L| << 1.
  std::vector<double> linear_ratios;
  std::vector<double> nonlinear_ratios;
};

/// Compares IF and ETD tables against IMEX as h shrinks. h_values must be
/// positive and strictly decreasing.
LimitConsistencyReport limit_consistency_check(std::span<const double> h_values,
                                               const ModelSpec& model,
                                               const WavenumberTable& ktab);

}  // namespace specflow
