#include "specflow/integrators.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "specflow/errors.hpp"
#include "specflow/phi.hpp"

namespace specflow {

using cd = std::complex<double>;

Method parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "imex") return Method::Imex;
  if (lower == "if") return Method::IntegratingFactor;
  if (lower == "etd") return Method::Etd;
  throw ConfigError("undefined integrator '" + std::string(name) + "'; valid: imex, if, etd",
                    "time.method");
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Imex:
      return "imex";
    case Method::IntegratingFactor:
      return "if";
    case Method::Etd:
      return "etd";
  }
  return "?";
}

namespace {

cd exp_symbol(cd z) {
  if (z.imag() == 0.0) return {std::exp(z.real()), 0.0};
  return std::exp(z);
}

}  // namespace

SchemeTables build_scheme(Method method, double h, const ModelSpec& model,
                          const WavenumberTable& ktab) {
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("step size must be positive", "time.h");
  if (model.linear_symbol.size() != ktab.size() || !same_geometry(model.grid, ktab.grid)) {
    throw ShapeError("model and wavenumber table are on different grids");
  }

  SchemeTables t;
  t.method = method;
  t.h = h;
  t.t_linear.resize(ktab.size());
  t.t_non.resize(ktab.size());

  double max_symbol = 0.0;
  for (std::size_t k = 0; k < ktab.size(); ++k) {
    const cd L = model.linear_symbol[k];
    if (!std::isfinite(L.real()) || !std::isfinite(L.imag())) {
      throw NumericError("linear symbol is not finite at mode " + std::to_string(k));
    }
    max_symbol = std::max(max_symbol, std::abs(L));
    const double mask = ktab.dealias_mask[k] ? 1.0 : 0.0;
    const cd z = h * L;
    switch (method) {
      case Method::Imex: {
        const cd denom = 1.0 - z;
        if (denom == cd(0.0, 0.0)) {
          throw SingularTableError("IMEX table is singular: h*L = 1 at mode " + std::to_string(k));
        }
        t.t_linear[k] = 1.0 / denom;
        t.t_non[k] = mask * h / denom;
        break;
      }
      case Method::IntegratingFactor:
        t.t_linear[k] = exp_symbol(z);
        t.t_non[k] = mask * h * t.t_linear[k];
        break;
      case Method::Etd:
        t.t_linear[k] = exp_symbol(z);
        t.t_non[k] = mask * h * phi1(z);
        break;
    }
  }
  t.stiffness_metric = h * max_symbol;
  return t;
}

template <class Real>
Stepper<Real>::Stepper(const ModelSpec& model, const SchemeTables& tables,
                       const RealField<Real>& initial)
    : h_(tables.h), t0_(initial.time), fft_(initial.grid) {
  if (!same_geometry(model.grid, initial.grid) || tables.t_linear.size() != initial.size()) {
    throw ShapeError("initial field, model and scheme tables must share one grid");
  }
  require_finite(initial);

  const std::size_t n = initial.size();
  t_linear_.assign(tables.t_linear.begin(), tables.t_linear.end());
  t_non_.assign(tables.t_non.begin(), tables.t_non.end());
  if (model.nonlinear) {
    multiplier_.assign(model.nonlinear->multiplier.begin(), model.nonlinear->multiplier.end());
    poly_ = model.nonlinear->poly;
    pointwise_.resize(n);
    nonlinear_.resize(n);
  }

  state_.real_view = initial;
  state_.spectral = SpectralField<Real>(initial.grid, initial.time);
  fft_.forward(std::span<const Real>(initial.values), std::span(state_.spectral.coeffs));
  state_.step_index = 0;
  state_.time = t0_;
}

template <class Real>
void Stepper<Real>::step() {
  auto& coeffs = state_.spectral.coeffs;
  auto& values = state_.real_view.values;
  const std::size_t n = coeffs.size();

  if (!multiplier_.empty()) {
    evaluate_polynomial<Real>(poly_, values, pointwise_);
    fft_.forward(std::span<const Real>(pointwise_), std::span(nonlinear_));
    for (std::size_t k = 0; k < n; ++k) {
      coeffs[k] = coeffs[k] * t_linear_[k] + (multiplier_[k] * nonlinear_[k]) * t_non_[k];
    }
  } else {
    for (std::size_t k = 0; k < n; ++k) coeffs[k] *= t_linear_[k];
  }
  fft_.inverse(std::span<const Complex>(coeffs), std::span(values));

  ++state_.step_index;
  state_.time = t0_ + static_cast<double>(state_.step_index) * h_;
  state_.spectral.time = state_.time;
  state_.real_view.time = state_.time;

  double peak = 0.0;
  bool finite = true;
  for (Real v : values) {
    if (!std::isfinite(v)) {
      finite = false;
      break;
    }
    peak = std::max(peak, static_cast<double>(std::abs(v)));
  }
  if (!finite) {
    throw DivergenceError(state_.step_index, std::numeric_limits<double>::infinity());
  }
  if (peak > kDivergenceThreshold) throw DivergenceError(state_.step_index, peak);
}

template <class Real>
void Stepper<Real>::advance(std::int64_t steps) {
  for (std::int64_t i = 0; i < steps; ++i) step();
}

template class Stepper<float>;
template class Stepper<double>;

LimitConsistencyReport limit_consistency_check(std::span<const double> h_values,
                                               const ModelSpec& model,
                                               const WavenumberTable& ktab) {
  for (std::size_t i = 0; i < h_values.size(); ++i) {
    if (!(h_values[i] > 0.0)) throw ConfigError("step sizes must be positive", "time.h");
    if (i > 0 && !(h_values[i] < h_values[i - 1])) {
      throw ConfigError("step sizes must be strictly decreasing", "time.h");
    }
  }

  std::size_t zero_mode = 0;
  LimitConsistencyReport report;
  for (double h : h_values) {
    const SchemeTables imex = build_scheme(Method::Imex, h, model, ktab);
    const SchemeTables integrating = build_scheme(Method::IntegratingFactor, h, model, ktab);
    const SchemeTables etd = build_scheme(Method::Etd, h, model, ktab);
    LimitConsistencyRow row;
    row.h = h;
    for (std::size_t k = 0; k < ktab.size(); ++k) {
      row.linear_gap = std::max(row.linear_gap, std::abs(integrating.t_linear[k] - imex.t_linear[k]));
      row.nonlinear_gap = std::max(row.nonlinear_gap, std::abs(etd.t_non[k] - imex.t_non[k]));
    }
    for (const SchemeTables* t : {&integrating, &etd}) {
      row.zero_mode_gap = std::max(
          {row.zero_mode_gap, std::abs(t->t_linear[zero_mode] - imex.t_linear[zero_mode]),
           std::abs(t->t_non[zero_mode] - imex.t_non[zero_mode])});
    }
    report.rows.push_back(row);
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const auto& a = report.rows[i - 1];
    const auto& b = report.rows[i];
    report.linear_ratios.push_back(a.linear_gap / b.linear_gap);
    report.nonlinear_ratios.push_back(a.nonlinear_gap / b.nonlinear_gap);
  }
  return report;
}

}  // namespace specflow
