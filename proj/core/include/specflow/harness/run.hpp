#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "specflow/diagnostics.hpp"
#include "specflow/harness/config.hpp"
#include "specflow/harness/frames.hpp"

namespace specflow::harness {

struct RunResult {
  Manifest manifest;
  std::filesystem::path manifest_path;
  std::vector<DiagnosticsRecord> diagnostics;
  RealField<double> final_field;  ///< state at t_final, widened to double
  std::vector<std::string> warnings;
};

/// Runs one simulation and writes its artifacts into config.output_dir:
///   manifest.json, initial.bin, frame_NNNNN.bin, diagnostics.csv
///
/// Frame i (1-based, i <= floor(t_final/frame_interval)) is written at the
/// first step whose time is >= i * frame_interval. Diagnostics rows are
/// written for the initial field and every frame. If the solution diverges
/// or an I/O error occurs, the manifest is rewritten with status
/// "diverged"/"incomplete" and the error is rethrown.
RunResult run(const RunConfig& config);

/// Advances the configured model and initial condition with (method, h) up
/// to t_end in memory, in the configured precision. No files are touched.
RealField<double> simulate(const RunConfig& config, Method method, double h, double t_end);

/// Steps at which frames 1..count are emitted.
std::vector<std::int64_t> frame_steps(double frame_interval, double h, double t_final);

}  // namespace specflow::harness
