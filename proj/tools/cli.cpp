#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "specflow/diagnostics.hpp"
#include "specflow/errors.hpp"
#include "specflow/harness/config.hpp"
#include "specflow/harness/frames.hpp"
#include "specflow/harness/run.hpp"
#include "specflow/harness/study.hpp"

namespace specflow::cli {

namespace fs = std::filesystem;
using namespace specflow::harness;

namespace {

std::string quote(std::string_view s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') q += '\\';
    q += c == '\n' ? ' ' : c;
  }
  return q + '"';
}

int report(std::ostream& err, int code, std::string_view kind, std::string_view key,
           std::string_view message) {
  err << "error code=" << kind;
  if (!key.empty()) err << " key=" << key;
  err << " message=" << quote(message) << '\n';
  return code;
}

std::string num(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct ManifestSource {
  std::string config;
  std::string manifest;

  fs::path resolve() const {
    if (!manifest.empty()) return manifest;
    if (config.empty()) throw ConfigError("either --manifest or --config is required", "manifest");
    return load_config(config).output_dir / "manifest.json";
  }
};

RunConfig config_from_manifest(const Manifest& m) {
  std::ostringstream text;
  for (const auto& [k, v] : m.config) text << k << " = " << v << '\n';
  return parse_config(text.str());
}

/// Writes to the named file, or to `out` for "-".
template <class Fn>
void with_output(const std::string& target, std::ostream& out, Fn&& fn) {
  if (target == "-") {
    fn(out);
    return;
  }
  std::ofstream file(target);
  if (!file) throw IoError("cannot open '" + target + "' for writing");
  fn(file);
  if (!file) throw IoError("failed writing '" + target + "'");
}

int cmd_run(const std::string& config_path, const std::string& output_dir, std::ostream& out,
            std::ostream& err) {
  RunConfig config = load_config(config_path);
  if (!output_dir.empty()) config.output_dir = output_dir;
  const RunResult result = harness::run(config);
  for (const auto& w : result.warnings) err << "warning: " << w << '\n';
  out << "wrote " << result.manifest.frames.size() << " frames to "
      << config.output_dir.string() << '\n';
  return kOk;
}

int cmd_study(const std::string& config_path, const std::vector<double>& hs,
              const std::vector<std::string>& method_names, double h_ref,
              std::optional<double> t_eval, int jobs, std::string out_path, std::ostream& out) {
  const RunConfig config = load_config(config_path);
  std::vector<Method> methods;
  for (const auto& name : method_names) {
    try {
      methods.push_back(parse_method(name));
    } catch (const ConfigError& e) {
      throw ConfigError(e.what(), "methods");
    }
  }
  const double t = t_eval.value_or(config.t_final);
  const StudyTable table = convergence_study(config, hs, methods, h_ref, t, jobs);
  if (out_path.empty()) {
    std::error_code ec;
    fs::create_directories(config.output_dir, ec);
    out_path = (config.output_dir / "errors.csv").string();
  }
  with_output(out_path, out, [&](std::ostream& os) { write_study_csv(os, table); });
  if (out_path != "-") out << "wrote " << out_path << '\n';
  return kOk;
}

int cmd_spectrum(const ManifestSource& src, std::optional<int> frame, int bins,
                 const std::string& out_path, std::ostream& out) {
  const fs::path manifest_path = src.resolve();
  const Manifest m = read_manifest(manifest_path);
  const FrameInfo* info = nullptr;
  if (frame && *frame == 0) {
    if (!m.initial) throw MissingFileError("run has no initial frame");
    info = &*m.initial;
  } else {
    for (const auto& f : m.frames) {
      if (!frame || f.index == *frame) info = &f;
    }
    if (!info) {
      throw ConfigError("frame " + (frame ? std::to_string(*frame) : std::string("(last)")) +
                            " not present in manifest",
                        "frame");
    }
  }
  const RealField<double> f = read_frame(manifest_path.parent_path() / info->file, m, info->time);
  const RadialSpectrum rs = radial_spectrum(f, bins);
  with_output(out_path, out, [&](std::ostream& os) {
    os << "# format_version=" << kCsvFormatVersion << " time=" << num(f.time)
       << " dominant_k=" << num(rs.dominant_k) << '\n';
    os << "k,power,count\n";
    for (std::size_t b = 0; b < rs.power.size(); ++b) {
      os << num(rs.bin_centers[b]) << ',' << num(rs.power[b]) << ',' << rs.counts[b] << '\n';
    }
  });
  if (out_path != "-") out << "dominant_k=" << num(rs.dominant_k) << '\n';
  return kOk;
}

int cmd_diag(const ManifestSource& src, std::string out_path, std::ostream& out) {
  const fs::path manifest_path = src.resolve();
  const Manifest m = read_manifest(manifest_path);
  const RunConfig config = config_from_manifest(m);
  const GridSpec grid = config.grid();
  const ModelSpec model = make_model(config.model_name, config.model_params, wavenumbers(grid));

  std::vector<FrameInfo> frames;
  if (m.initial) frames.push_back(*m.initial);
  frames.insert(frames.end(), m.frames.begin(), m.frames.end());
  if (out_path.empty()) out_path = (manifest_path.parent_path() / "diagnostics_frames.csv").string();

  std::vector<DiagnosticsRecord> rows;
  for (const auto& fi : frames) {
    rows.push_back(record(read_frame(manifest_path.parent_path() / fi.file, m, fi.time), model));
  }
  with_output(out_path, out, [&](std::ostream& os) {
    os << "# format_version=" << kCsvFormatVersion << '\n' << "time,free_energy,mean,max_abs\n";
    for (const auto& r : rows) {
      os << num(r.time) << ',' << (r.free_energy ? num(*r.free_energy) : std::string()) << ','
         << num(r.mean_value) << ',' << num(r.max_abs) << '\n';
    }
  });
  if (out_path != "-") out << "wrote " << out_path << '\n';
  return kOk;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-spectral solver for stiff semi-linear PDEs on periodic domains", "specflow"};
  app.require_subcommand(1);

  std::string config_path, output_dir;
  auto* run = app.add_subcommand("run", "Run one simulation and write frames + diagnostics");
  run->add_option("--config,-c", config_path, "Config file")->required();
  run->add_option("--output-dir,-o", output_dir, "Override run.output_dir");

  std::vector<double> hs;
  std::vector<std::string> method_names{"imex", "if", "etd"};
  double h_ref = 1e-4;
  std::optional<double> t_eval;
  int jobs = 1;
  std::string study_out;
  auto* study = app.add_subcommand("study", "Step-size convergence table against an ETD reference");
  study->set_help_flag("--help", "Print this help message and exit");
  study->add_option("--config,-c", config_path, "Config file")->required();
  study->add_option("--h", hs, "Comma-separated step sizes")->required()->delimiter(',');
  study->add_option("--methods", method_names, "Comma-separated methods (imex,if,etd)")
      ->delimiter(',');
  study->add_option("--href", h_ref, "Reference ETD step size");
  study->add_option("--t-eval", t_eval, "Evaluation time (default: time.t_final)");
  study->add_option("--jobs,-j", jobs, "Concurrent cells");
  study->add_option("--out", study_out, "Output CSV (default: <output_dir>/errors.csv, '-' = stdout)");

  ManifestSource src;
  std::optional<int> frame;
  int bins = 64;
  std::string spectrum_out = "-";
  auto* spectrum = app.add_subcommand("spectrum", "Radial power spectrum of a stored frame");
  spectrum->add_option("--manifest,-m", src.manifest, "Run manifest.json");
  spectrum->add_option("--config,-c", src.config, "Config file (manifest under run.output_dir)");
  spectrum->add_option("--frame", frame, "Frame index (0 = initial, default: last)");
  spectrum->add_option("--bins", bins, "Number of |k| shells");
  spectrum->add_option("--out", spectrum_out, "Output CSV ('-' = stdout)");

  std::string diag_out;
  auto* diag = app.add_subcommand("diag", "Recompute free energy / mass from stored frames");
  diag->add_option("--manifest,-m", src.manifest, "Run manifest.json");
  diag->add_option("--config,-c", src.config, "Config file (manifest under run.output_dir)");
  diag->add_option("--out", diag_out, "Output CSV (default: <run>/diagnostics_frames.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report(err, kBadConfig, "usage", "", e.what());
  }

  try {
    if (*run) return cmd_run(config_path, output_dir, out, err);
    if (*study) return cmd_study(config_path, hs, method_names, h_ref, t_eval, jobs, study_out, out);
    if (*spectrum) return cmd_spectrum(src, frame, bins, spectrum_out, out);
    if (*diag) return cmd_diag(src, diag_out, out);
  } catch (const ConfigError& e) {
    return report(err, kBadConfig, "config", e.key(), e.what());
  } catch (const MissingFileError& e) {
    return report(err, kMissingFile, "missing_file", "", e.what());
  } catch (const DivergenceError& e) {
    return report(err, kDiverged, "diverged", "", e.what());
  } catch (const IoError& e) {
    return report(err, kIoFailure, "io", "", e.what());
  } catch (const std::exception& e) {
    return report(err, kFailure, "internal", "", e.what());
  }
  return kFailure;
}

}  // namespace specflow::cli
