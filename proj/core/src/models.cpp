#include "specflow/models.hpp"

#include <cmath>
#include <set>

#include "specflow/errors.hpp"
#include "specflow/fft.hpp"

namespace specflow {

namespace {

using cd = std::complex<double>;

void require_positive(double v, const char* key) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(key) + " must be positive", key);
  }
}

void require_finite_param(double v, const char* key) {
  if (!std::isfinite(v)) throw ConfigError(std::string(key) + " must be finite", key);
}

void require_1d(const WavenumberTable& ktab, const std::string& model) {
  if (ktab.grid.dim != 1) {
    throw UnsupportedOperation("model '" + model + "' is only defined on 1D grids");
  }
}

// (1/N^d) * sum_k weight(k^2) |F_k|^2, i.e. sum_x of the matching quadratic form.
template <class Weight>
double spectral_quadratic_sum(const RealField<double>& f, const WavenumberTable& ktab,
                              Weight&& weight) {
  const SpectralField<double> F = forward(f);
  double s = 0.0;
  for (std::size_t m = 0; m < F.size(); ++m) s += weight(ktab.k2[m]) * std::norm(F.coeffs[m]);
  return s / static_cast<double>(F.size());
}

}  // namespace

ModelSpec ch_model(const CHParams& p, const WavenumberTable& ktab) {
  require_positive(p.W, "model.W");
  require_positive(p.kappa, "model.kappa");
  require_positive(p.M, "model.M");

  ModelSpec m;
  m.name = "ch";
  m.params = {{"W", p.W}, {"kappa", p.kappa}, {"M", p.M}};
  m.grid = ktab.grid;
  m.conserves_mass = true;
  m.linear_symbol.resize(ktab.size());
  NonlinearTerm nl;
  nl.poly = {0.0, 0.0, -3.0, 2.0};
  nl.multiplier.resize(ktab.size());
  for (std::size_t k = 0; k < ktab.size(); ++k) {
    const double k2 = ktab.k2[k];
    m.linear_symbol[k] = -p.M * (p.kappa * k2 * k2 + 2.0 * p.W * k2);
    nl.multiplier[k] = -2.0 * p.M * p.W * k2;
  }
  m.nonlinear = std::move(nl);
  m.free_energy = [p](const RealField<double>& f) { return ch_free_energy(f, p); };
  return m;
}

double ch_free_energy(const RealField<double>& f, const CHParams& p) {
  require_finite(f);
  const WavenumberTable ktab = wavenumbers(f.grid);
  const double gradient = spectral_quadratic_sum(f, ktab, [](double k2) { return k2; });
  double bulk = 0.0;
  for (double eta : f.values) {
    const double w = eta * (1.0 - eta);
    bulk += p.W * w * w;
  }
  return (0.5 * p.kappa * gradient + bulk) * f.grid.cell_volume();
}

ModelSpec pfc_model(const PFCParams& p, const WavenumberTable& ktab) {
  require_finite_param(p.r, "model.r");
  require_positive(p.M, "model.M");

  ModelSpec m;
  m.name = "pfc";
  m.params = {{"r", p.r}, {"M", p.M}};
  m.grid = ktab.grid;
  m.conserves_mass = true;
  m.linear_symbol.resize(ktab.size());
  NonlinearTerm nl;
  nl.poly = {0.0, 0.0, 0.0, 1.0};
  nl.multiplier.resize(ktab.size());
  for (std::size_t k = 0; k < ktab.size(); ++k) {
    const double k2 = ktab.k2[k];
    m.linear_symbol[k] = -p.M * k2 * (k2 * k2 - 2.0 * k2 + 1.0 + p.r);
    nl.multiplier[k] = -p.M * k2;
  }
  m.nonlinear = std::move(nl);
  m.free_energy = [p](const RealField<double>& f) { return pfc_free_energy(f, p); };
  return m;
}

double pfc_free_energy(const RealField<double>& f, const PFCParams& p) {
  require_finite(f);
  const WavenumberTable ktab = wavenumbers(f.grid);
  const double swift_hohenberg = spectral_quadratic_sum(f, ktab, [](double k2) {
    const double s = 1.0 - k2;
    return s * s;
  });
  double local = 0.0;
  for (double eta : f.values) local += 0.25 * eta * eta * (2.0 * p.r + eta * eta);
  return (0.5 * swift_hohenberg + local) * f.grid.cell_volume();
}

ModelSpec advdiff_model(const AdvDiffParams& p, const WavenumberTable& ktab) {
  require_1d(ktab, "advdiff");
  require_finite_param(p.u, "model.u");
  if (!(p.D >= 0.0) || !std::isfinite(p.D)) {
    throw ConfigError("model.D must be non-negative", "model.D");
  }
  ModelSpec m;
  m.name = "advdiff";
  m.params = {{"u", p.u}, {"D", p.D}};
  m.grid = ktab.grid;
  m.conserves_mass = true;
  m.linear_symbol.resize(ktab.size());
  for (std::size_t k = 0; k < ktab.size(); ++k) {
    const double kx = ktab.k_axis[0][k];
    m.linear_symbol[k] = -cd(p.D * kx * kx, p.u * kx);
  }
  return m;
}

RealField<double> advdiff_exact(const RealField<double>& f0, const AdvDiffParams& p, double t) {
  if (f0.grid.dim != 1) throw UnsupportedOperation("advdiff_exact is only defined in 1D");
  const WavenumberTable ktab = wavenumbers(f0.grid);
  SpectralField<double> F = forward(f0);
  for (std::size_t k = 0; k < F.size(); ++k) {
    const double kx = ktab.k_axis[0][k];
    F.coeffs[k] *= std::exp(-cd(p.D * kx * kx, p.u * kx) * t);
  }
  RealField<double> out = inverse(F);
  out.time = f0.time + t;
  return out;
}

ModelSpec burgers_model(const BurgersParams& p, const WavenumberTable& ktab) {
  require_1d(ktab, "burgers");
  require_positive(p.nu, "model.nu");
  ModelSpec m;
  m.name = "burgers";
  m.params = {{"nu", p.nu}};
  m.grid = ktab.grid;
  m.conserves_mass = true;
  m.linear_symbol.resize(ktab.size());
  NonlinearTerm nl;
  nl.poly = {0.0, 0.0, 1.0};
  nl.multiplier.resize(ktab.size());
  for (std::size_t k = 0; k < ktab.size(); ++k) {
    const double kx = ktab.k_axis[0][k];
    m.linear_symbol[k] = -p.nu * kx * kx;
    nl.multiplier[k] = cd(0.0, -0.5 * kx);
  }
  m.nonlinear = std::move(nl);
  return m;
}

const std::vector<std::string>& model_names() {
  static const std::vector<std::string> names = {"ch", "pfc", "advdiff", "burgers"};
  return names;
}

namespace {

double take(std::map<std::string, double>& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  if (it == params.end()) return fallback;
  const double v = it->second;
  params.erase(it);
  return v;
}

}  // namespace

ModelSpec make_model(const std::string& name, const std::map<std::string, double>& params,
                     const WavenumberTable& ktab) {
  auto rest = params;
  ModelSpec m;
  if (name == "ch") {
    CHParams p;
    p.W = take(rest, "W", p.W);
    p.kappa = take(rest, "kappa", p.kappa);
    p.M = take(rest, "M", p.M);
    m = ch_model(p, ktab);
  } else if (name == "pfc") {
    PFCParams p;
    p.r = take(rest, "r", p.r);
    p.M = take(rest, "M", p.M);
    m = pfc_model(p, ktab);
  } else if (name == "advdiff") {
    AdvDiffParams p;
    p.u = take(rest, "u", p.u);
    p.D = take(rest, "D", p.D);
    m = advdiff_model(p, ktab);
  } else if (name == "burgers") {
    BurgersParams p;
    p.nu = take(rest, "nu", p.nu);
    m = burgers_model(p, ktab);
  } else {
    throw ConfigError("unknown model '" + name + "'; valid: ch, pfc, advdiff, burgers",
                      "model.name");
  }
  if (!rest.empty()) {
    const std::string key = "model." + rest.begin()->first;
    throw ConfigError("parameter '" + rest.begin()->first + "' does not apply to model '" +
                          name + "'",
                      key);
  }
  return m;
}

template <class Real>
void evaluate_polynomial(std::span<const double> poly, std::span<const Real> in,
                         std::span<Real> out) {
  if (poly.empty()) {
    std::fill(out.begin(), out.end(), Real(0));
    return;
  }
  const std::size_t top = poly.size() - 1;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const Real x = in[i];
    Real acc = static_cast<Real>(poly[top]);
    for (std::size_t p = top; p-- > 0;) acc = acc * x + static_cast<Real>(poly[p]);
    out[i] = acc;
  }
}

template <class Real>
SpectralField<Real> nonlinear(const ModelSpec& model, const RealField<Real>& eta) {
  if (!same_geometry(model.grid, eta.grid)) {
    throw ShapeError("field grid does not match the model grid");
  }
  SpectralField<Real> out(eta.grid, eta.time);
  if (!model.nonlinear) return out;
  const NonlinearTerm& nl = *model.nonlinear;
  std::vector<Real> pointwise(eta.size());
  evaluate_polynomial<Real>(nl.poly, eta.values, pointwise);
  Fft<Real> fft(eta.grid);
  fft.forward(std::span<const Real>(pointwise), std::span(out.coeffs));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out.coeffs[k] *= std::complex<Real>(nl.multiplier[k]);
  }
  return out;
}

template void evaluate_polynomial(std::span<const double>, std::span<const float>,
                                  std::span<float>);
template void evaluate_polynomial(std::span<const double>, std::span<const double>,
                                  std::span<double>);
template SpectralField<float> nonlinear(const ModelSpec&, const RealField<float>&);
template SpectralField<double> nonlinear(const ModelSpec&, const RealField<double>&);

}  // namespace specflow
