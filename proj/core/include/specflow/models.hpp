#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specflow/field.hpp"
#include "specflow/spectral.hpp"

namespace specflow {

struct CHParams {
  double W = 1.0;      ///< double-well height
  double kappa = 0.1;  ///< gradient-energy coefficient
  double M = 1.0;      ///< mobility
};

struct PFCParams {
  double r = -0.25;  ///< distance from the melting temperature
  double M = 1.0;
};

struct AdvDiffParams {
  double u = 5.0;
  double D = 0.01;
};

struct BurgersParams {
  double nu = 0.001;
};

/// Nonlinear part of the right-hand side in the factored form
///   N_k(eta) = multiplier_k * F{ sum_p poly[p] * eta^p }_k.
/// Every model in the catalog has a polynomial nonlinearity and a single
/// derivative prefactor, which keeps the evaluation allocation free.
/// Dealiasing is not applied here; it lives in the scheme tables.
struct NonlinearTerm {
  std::vector<double> poly;
  std::vector<std::complex<double>> multiplier;
};

using FreeEnergyFn = std::function<double(const RealField<double>&)>;

/// d(eta_k)/dt = linear_symbol_k * eta_k + N_k(eta).
struct ModelSpec {
  std::string name;
  std::map<std::string, double> params;
  GridSpec grid;
  std::vector<std::complex<double>> linear_symbol;
  std::optional<NonlinearTerm> nonlinear;  ///< empty for purely linear models
  FreeEnergyFn free_energy;                ///< empty when the model has no functional
  bool conserves_mass = false;

  bool has_free_energy() const { return static_cast<bool>(free_energy); }
};

/// Cahn-Hilliard: L = -M(kappa k^4 + 2W k^2), N = -2MW k^2 F{-3eta^2 + 2eta^3}.
ModelSpec ch_model(const CHParams& params, const WavenumberTable& ktab);
/// Integral of (kappa/2)|grad eta|^2 + W eta^2 (1-eta)^2 as a Riemann sum,
/// the gradient term evaluated in Fourier space.
double ch_free_energy(const RealField<double>& f, const CHParams& params);

/// Phase-field crystal: L = -M k^2 (k^4 - 2k^2 + 1 + r), N = -M k^2 F{eta^3}.
ModelSpec pfc_model(const PFCParams& params, const WavenumberTable& ktab);
/// Integral of (1/2) eta (1+lap)^2 eta + (1/4) eta^2 (2r + eta^2).
double pfc_free_energy(const RealField<double>& f, const PFCParams& params);

/// 1D advection-diffusion: L = -(i u k + D k^2), no nonlinear term.
ModelSpec advdiff_model(const AdvDiffParams& params, const WavenumberTable& ktab);
/// Analytical solution at time t from f0 (advanced by t, not to absolute time t).
RealField<double> advdiff_exact(const RealField<double>& f0, const AdvDiffParams& params,
                                double t);

/// 1D viscous Burgers in conservative form: L = -nu k^2, N = -(ik/2) F{eta^2}.
ModelSpec burgers_model(const BurgersParams& params, const WavenumberTable& ktab);

/// Builds a catalog model by name ("ch", "pfc", "advdiff", "burgers").
/// Unknown parameters raise ConfigError; missing ones take the defaults above.
ModelSpec make_model(const std::string& name, const std::map<std::string, double>& params,
                     const WavenumberTable& ktab);

/// Names accepted by make_model.
const std::vector<std::string>& model_names();

/// Evaluates sum_p poly[p] * x^p pointwise (Horner).
template <class Real>
void evaluate_polynomial(std::span<const double> poly, std::span<const Real> in,
                         std::span<Real> out);

/// Raw (not dealiased) N_k(eta). Zero everywhere for linear models.
template <class Real>
SpectralField<Real> nonlinear(const ModelSpec& model, const RealField<Real>& eta);

}  // namespace specflow
