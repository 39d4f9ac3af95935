#include "specflow/harness/run.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "specflow/errors.hpp"
#include "specflow/harness/initial.hpp"
#include "specflow/integrators.hpp"
#include "specflow/spectral.hpp"

namespace specflow::harness {

namespace {

std::string frame_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "frame_%05d.bin", index);
  return buf;
}

std::string imex_warning(const SchemeTables& t) {
  std::ostringstream os;
  os << "IMEX step violates h*max|L| < 1 (h*max|L| = " << t.stiffness_metric
     << "); the scheme stays stable but loses accuracy on the stiffest modes";
  return os.str();
}

template <class Real>
RunResult run_impl(const RunConfig& config) {
  const GridSpec grid = config.grid();
  const WavenumberTable ktab = wavenumbers(grid);
  const ModelSpec model = make_model(config.model_name, config.model_params, ktab);
  const SchemeTables tables = build_scheme(config.method, config.h, model, ktab);

  RunResult result;
  if (config.method == Method::Imex && tables.exceeds_imex_bound()) {
    result.warnings.push_back(imex_warning(tables));
  }

  std::error_code ec;
  std::filesystem::create_directories(config.output_dir, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + config.output_dir.string() +
                  "': " + ec.message());
  }

  Manifest& manifest = result.manifest;
  manifest.grid = grid;
  manifest.dtype = config.precision == Precision::Double ? "float64" : "float32";
  manifest.config = to_key_values(config);
  manifest.warnings = result.warnings;
  result.manifest_path = config.output_dir / "manifest.json";
  write_manifest(result.manifest_path, manifest);

  const RealField<double> initial64 = build_initial(config.ic, grid, config.seed);
  const RealField<Real> initial = convert<Real>(initial64);
  DiagnosticsCsv csv(config.output_dir / manifest.diagnostics_file);

  auto emit = [&](const RealField<Real>& f) {
    DiagnosticsRecord r = record(convert<double>(f), model);
    csv.append(r);
    result.diagnostics.push_back(r);
  };

  try {
    write_frame(config.output_dir / "initial.bin", initial);
    manifest.initial = FrameInfo{0, 0.0, 0, "initial.bin"};
    emit(initial);

    Stepper<Real> stepper(model, tables, initial);
    const std::vector<std::int64_t> targets = frame_steps(config.frame_interval, config.h,
                                                          config.t_final);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      stepper.advance(targets[i] - stepper.state().step_index);
      const auto& field = stepper.state().real_view;
      const int index = static_cast<int>(i + 1);
      const std::string name = frame_name(index);
      write_frame(config.output_dir / name, field);
      manifest.frames.push_back(FrameInfo{index, field.time, stepper.state().step_index, name});
      emit(field);
    }
    const std::int64_t total = step_count(config.t_final, config.h, "time.t_final");
    stepper.advance(total - stepper.state().step_index);
    result.final_field = convert<double>(stepper.state().real_view);
  } catch (const DivergenceError& e) {
    manifest.status = "diverged";
    manifest.error = e.what();
    write_manifest(result.manifest_path, manifest);
    throw;
  } catch (const IoError& e) {
    manifest.status = "incomplete";
    manifest.error = e.what();
    try {
      write_manifest(result.manifest_path, manifest);
    } catch (const IoError&) {
    }
    throw;
  }

  manifest.status = "complete";
  write_manifest(result.manifest_path, manifest);
  return result;
}

template <class Real>
RealField<double> simulate_impl(const RunConfig& config, Method method, double h, double t_end) {
  const GridSpec grid = config.grid();
  const WavenumberTable ktab = wavenumbers(grid);
  const ModelSpec model = make_model(config.model_name, config.model_params, ktab);
  const SchemeTables tables = build_scheme(method, h, model, ktab);
  const RealField<Real> initial = convert<Real>(build_initial(config.ic, grid, config.seed));
  Stepper<Real> stepper(model, tables, initial);
  stepper.advance(step_count(t_end, h, "t_eval"));
  return convert<double>(stepper.state().real_view);
}

}  // namespace

std::vector<std::int64_t> frame_steps(double frame_interval, double h, double t_final) {
  const auto count = static_cast<std::int64_t>(std::floor(t_final / frame_interval + 1e-9));
  std::vector<std::int64_t> steps;
  steps.reserve(static_cast<std::size_t>(std::max<std::int64_t>(count, 0)));
  for (std::int64_t i = 1; i <= count; ++i) {
    const double target = static_cast<double>(i) * frame_interval / h;
    steps.push_back(static_cast<std::int64_t>(std::ceil(target - 1e-9 * std::max(1.0, target))));
  }
  return steps;
}

RunResult run(const RunConfig& config) {
  validate(config);
  return config.precision == Precision::Double ? run_impl<double>(config)
                                               : run_impl<float>(config);
}

RealField<double> simulate(const RunConfig& config, Method method, double h, double t_end) {
  return config.precision == Precision::Double ? simulate_impl<double>(config, method, h, t_end)
                                               : simulate_impl<float>(config, method, h, t_end);
}

}  // namespace specflow::harness
