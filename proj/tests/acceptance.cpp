// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
// Optional arguments select criteria by name substring.

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "specflow/diagnostics.hpp"
#include "specflow/harness/initial.hpp"
#include "specflow/harness/run.hpp"
#include "specflow/harness/study.hpp"
#include "specflow/phi.hpp"

using namespace specflow;
using namespace specflow::harness;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Verdict {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string name;
  std::function<Verdict()> check;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

fs::path scratch_root() {
  static const fs::path root =
      fs::temp_directory_path() / ("specflow_acceptance_" + std::to_string(::getpid()));
  return root;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double relative_l2(const RealField<double>& a, const RealField<double>& ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += (a[i] - ref[i]) * (a[i] - ref[i]);
    den += ref[i] * ref[i];
  }
  return std::sqrt(num / den);
}

RunConfig ch_desk(double t_final, double frame_interval) {
  RunConfig c;
  c.model_name = "ch";
  c.model_params = {{"W", 1.0}, {"kappa", 0.1}, {"M", 1.0}};
  c.dim = 2;
  c.n = 64;
  c.length = 16 * kPi;
  c.method = Method::Etd;
  c.h = 0.01;
  c.t_final = t_final;
  c.frame_interval = frame_interval;
  c.seed = 12345;
  c.ic = {.kind = InitialKind::UniformNoise, .eta0 = 0.5, .noise_amp = 0.02};
  return c;
}

RunConfig pfc_desk(double eta0, double h, double t_final) {
  RunConfig c;
  c.model_name = "pfc";
  c.model_params = {{"r", -0.25}, {"M", 1.0}};
  c.dim = 2;
  c.n = 64;
  c.length = 16 * kPi;
  c.method = Method::Etd;
  c.h = h;
  c.t_final = t_final;
  c.frame_interval = t_final;
  c.seed = 12345;
  c.ic = {.kind = InitialKind::UniformNoise, .eta0 = eta0, .noise_amp = 0.02 * std::abs(eta0)};
  return c;
}

Verdict linear_exactness() {
  const auto t0 = std::chrono::steady_clock::now();
  RunConfig c;
  c.model_name = "advdiff";
  c.model_params = {{"u", 5.0}, {"D", 0.01}};
  c.dim = 1;
  c.n = 4096;
  c.length = 2 * kPi;
  c.h = 0.01;
  c.t_final = 1.0;
  c.frame_interval = 1.0;
  c.ic = {.kind = InitialKind::CosineProbe, .eta0 = 0.0};
  c.ic.extra = {{"epsilon", 1.0}, {"k0", 1.0}};
  const auto exact = advdiff_exact(build_initial(c.ic, c.grid(), c.seed), {.u = 5.0, .D = 0.01}, 1.0);
  const double etd = relative_l2(simulate(c, Method::Etd, 0.01, 1.0), exact);
  const double iff = relative_l2(simulate(c, Method::IntegratingFactor, 0.01, 1.0), exact);
  const double imex = relative_l2(simulate(c, Method::Imex, 0.01, 1.0), exact);
  const double elapsed = seconds_since(t0);
  return {etd <= 1e-12 && iff <= 1e-12 && imex >= 1e-6 && elapsed < 5.0,
          fmt("rel L2: etd=%.2e if=%.2e (<=1e-12), imex=%.2e (>=1e-6); %.2f s (<5 s)", etd, iff,
              imex, elapsed)};
}

Verdict phi1_accuracy() {
  using big = boost::multiprecision::cpp_bin_float_50;
  const int per_side = 5000;
  double worst = 0.0, worst_z = 0.0;
  for (int i = 0; i < per_side; ++i) {
    const double mag = std::pow(10.0, -14.0 + (std::log10(50.0) + 14.0) * i / (per_side - 1));
    for (double z : {mag, -mag}) {
      const big bz(z);
      const double ref = static_cast<double>(boost::multiprecision::expm1(bz) / bz);
      const double rel = std::abs(phi1(z) - ref) / std::abs(ref);
      if (rel > worst) {
        worst = rel;
        worst_z = z;
      }
    }
  }
  const bool zero_exact = phi1(0.0) == 1.0;
  return {worst <= 1e-13 && zero_exact,
          fmt("%d samples, worst rel err %.2e at z=%.3g (<=1e-13); phi1(0)==1: %s", 2 * per_side,
              worst, worst_z, zero_exact ? "yes" : "no")};
}

/// CH desk run shared by the mass and free-energy criteria.
const RunResult& ch_desk_run(double& elapsed) {
  static RunResult result;
  static double seconds = -1.0;
  if (seconds < 0.0) {
    RunConfig c = ch_desk(50.0, 1.0);
    c.output_dir = scratch_root() / "ch_mass";
    const auto t0 = std::chrono::steady_clock::now();
    result = run(c);
    seconds = seconds_since(t0);
  }
  elapsed = seconds;
  return result;
}

Verdict mass_conservation() {
  double elapsed = 0.0;
  const RunResult& r = ch_desk_run(elapsed);
  const double m0 = r.diagnostics.front().mean_value;
  double worst = 0.0;
  for (const auto& d : r.diagnostics) worst = std::max(worst, std::abs(d.mean_value - m0));
  return {worst <= 1e-10 && elapsed < 30.0 && r.diagnostics.size() == 51,
          fmt("max |mean(t)-mean(0)| = %.2e over %zu frames (<=1e-10); %.1f s (<30 s)", worst,
              r.diagnostics.size(), elapsed)};
}

int monotonicity_violations(const std::vector<DiagnosticsRecord>& rows, double& worst_rise) {
  int bad = 0;
  worst_rise = -1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double prev = *rows[i - 1].free_energy, next = *rows[i].free_energy;
    worst_rise = std::max(worst_rise, next - prev);
    if (next > prev + 1e-8 * (1.0 + std::abs(prev))) ++bad;
  }
  return bad;
}

Verdict free_energy_monotonicity() {
  double elapsed = 0.0;
  const RunResult& ch = ch_desk_run(elapsed);
  double ch_rise = 0.0;
  const int ch_bad = monotonicity_violations(ch.diagnostics, ch_rise);

  RunConfig p = pfc_desk(-0.285, 0.05, 200.0);
  p.frame_interval = 1.0;
  p.output_dir = scratch_root() / "pfc_energy";
  const RunResult pfc = run(p);
  double pfc_rise = 0.0;
  const int pfc_bad = monotonicity_violations(pfc.diagnostics, pfc_rise);
  return {ch_bad == 0 && pfc_bad == 0,
          fmt("CH: %d violations in %zu frames (largest step dF=%.2e); PFC: %d violations in %zu "
              "frames (largest step dF=%.2e)",
              ch_bad, ch.diagnostics.size(), ch_rise, pfc_bad, pfc.diagnostics.size(), pfc_rise)};
}

Verdict table1_trend() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<double> hs{0.1, 0.02, 0.004};
  const std::vector<Method> ms(kAllMethods.begin(), kAllMethods.end());
  const StudyTable t = convergence_study(ch_desk(10.0, 10.0), hs, ms, 1e-4, 10.0);
  const double elapsed = seconds_since(t0);

  bool monotone = true, etd_beats_if = true;
  for (Method m : ms) {
    for (std::size_t i = 1; i < hs.size(); ++i) {
      if (!(*t.at(hs[i], m).error < *t.at(hs[i - 1], m).error)) monotone = false;
    }
  }
  for (double h : hs) {
    if (!(*t.at(h, Method::Etd).error <= *t.at(h, Method::IntegratingFactor).error)) {
      etd_beats_if = false;
    }
  }
  const double etd = *t.at(0.004, Method::Etd).error, imex = *t.at(0.004, Method::Imex).error;
  const double parity = std::max(etd, imex) / std::min(etd, imex);
  std::ostringstream table;
  for (double h : hs) {
    table << fmt(" h=%g[imex %.2e if %.2e etd %.2e]", h, *t.at(h, Method::Imex).error,
                 *t.at(h, Method::IntegratingFactor).error, *t.at(h, Method::Etd).error);
  }
  return {monotone && etd_beats_if && parity <= 2.0 && elapsed < 600.0,
          fmt("(a) monotone: %s, (b) etd<=if: %s, (c) etd/imex ratio at 0.004 = %.2f (<=2); "
              "%.1f s (<600 s);",
              monotone ? "yes" : "no", etd_beats_if ? "yes" : "no", parity, elapsed) +
              table.str()};
}

Verdict table2_gap() {
  const std::vector<double> hs{0.2};
  const std::vector<Method> ms{Method::IntegratingFactor, Method::Etd};
  const StudyTable t = convergence_study(pfc_desk(-0.285, 0.2, 750.0), hs, ms, 1e-3, 750.0);
  const auto& iff = t.at(0.2, Method::IntegratingFactor);
  const auto& etd = t.at(0.2, Method::Etd);
  if (!iff.error || !etd.error) return {false, "a study cell diverged"};
  const double gap = *iff.error / *etd.error;
  return {gap >= 10.0, fmt("t=750, h=0.2, h_ref=1e-3: IF %.2e vs ETD %.2e, ratio %.1f (>=10)",
                           *iff.error, *etd.error, gap)};
}

Verdict pattern_selection() {
  const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8};
  auto median = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
  };
  std::vector<int> crystal_sectors, lamellar_sectors;
  double k_min = 1e300, k_max = -1e300;
  for (std::uint64_t seed : seeds) {
    RunConfig crystal = pfc_desk(-0.285, 0.1, 1500.0);
    crystal.seed = seed;
    const auto fc = simulate(crystal, Method::Etd, 0.1, 1500.0);
    const auto rs = radial_spectrum(fc, 64);
    k_min = std::min(k_min, rs.dominant_k);
    k_max = std::max(k_max, rs.dominant_k);
    crystal_sectors.push_back(angular_profile(fc, rs.dominant_k, 0.15).significant_sectors);

    RunConfig lamellar = pfc_desk(-0.085, 0.1, 1500.0);
    lamellar.seed = seed;
    const auto fl = simulate(lamellar, Method::Etd, 0.1, 1500.0);
    const double kl = radial_spectrum(fl, 64).dominant_k;
    lamellar_sectors.push_back(angular_profile(fl, kl, 0.15).significant_sectors);
  }
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += std::to_string(x);
    return s;
  };
  const double mc = median(crystal_sectors), ml = median(lamellar_sectors);
  return {k_min >= 0.9 && k_max <= 1.1 && mc >= 6 && ml <= 2,
          fmt("crystal dominant k in [%.3f, %.3f] (within [0.9,1.1]); sectors per seed: "
              "crystal %s (median %.1f >= 6), lamellar %s (median %.1f <= 2)",
              k_min, k_max, list(crystal_sectors).c_str(), mc, list(lamellar_sectors).c_str(), ml)};
}

Verdict burgers_shock() {
  RunConfig c;
  c.model_name = "burgers";
  c.model_params = {{"nu", 0.001}};
  c.dim = 1;
  c.n = 4096;
  c.length = 2 * kPi;
  c.origin = -kPi;
  c.h = 1e-3;
  c.t_final = 1.0;
  c.frame_interval = 1.0;
  c.ic = {.kind = InitialKind::GaussianBump, .eta0 = 0.0};
  const auto f0 = build_initial(c.ic, c.grid(), c.seed);
  const auto coarse = simulate(c, Method::Etd, 1e-3, 1.0);
  const auto fine = simulate(c, Method::Etd, 1e-4, 1.0);
  const double err = l2_error(coarse, fine);
  bool finite = true;
  for (double v : coarse.values) finite = finite && std::isfinite(v);
  const double mass_drift = std::abs(mean(coarse) - mean(f0)) / std::abs(mean(f0));
  return {err <= 1e-3 && finite && mass_drift <= 1e-8,
          fmt("L2(h=1e-3 vs 1e-4) = %.2e (<=1e-3); finite: %s; integral drift %.1e (<=1e-8)", err,
              finite ? "yes" : "no", mass_drift)};
}

Verdict determinism() {
  int compared = 0, differing = 0;
  for (Precision p : {Precision::Double, Precision::Single}) {
    RunConfig c = ch_desk(5.0, 1.0);
    c.precision = p;
    std::vector<fs::path> dirs;
    for (const char* tag : {"a", "b"}) {
      c.output_dir = scratch_root() / (std::string("det_") + std::string(to_string(p)) + tag);
      run(c);
      dirs.push_back(c.output_dir);
    }
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      if (entry.path().extension() != ".bin") continue;
      auto slurp = [](const fs::path& f) {
        std::ifstream in(f, std::ios::binary);
        return std::string(std::istreambuf_iterator<char>(in), {});
      };
      ++compared;
      if (slurp(entry.path()) != slurp(dirs[1] / entry.path().filename())) ++differing;
    }
  }
  return {compared == 12 && differing == 0,
          fmt("%d frame files compared across double and single runs, %d differ", compared,
              differing)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"linear-exactness", linear_exactness},
      {"phi1-accuracy", phi1_accuracy},
      {"mass-conservation", mass_conservation},
      {"free-energy-monotonicity", free_energy_monotonicity},
      {"table1-trend", table1_trend},
      {"table2-if-gap", table2_gap},
      {"pfc-pattern-selection", pattern_selection},
      {"burgers-shock", burgers_shock},
      {"determinism", determinism},
  };

  fs::create_directories(scratch_root());
  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (argc > 1 && std::none_of(argv + 1, argv + argc, [&](const char* a) {
          return c.name.find(a) != std::string::npos;
        })) {
      continue;
    }
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("%s %-26s %s [%.1f s]\n", v.pass ? "PASS" : "FAIL", c.name.c_str(),
                v.detail.c_str(), seconds_since(t0));
    std::fflush(stdout);
  }
  std::error_code ec;
  fs::remove_all(scratch_root(), ec);
  std::printf("%d/%d criteria passed\n", ran - failures, ran);
  return failures == 0 ? 0 : 1;
}
