#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "specflow/diagnostics.hpp"
#include "specflow/field.hpp"

namespace specflow::harness {

inline constexpr int kFrameFormatVersion = 1;
inline constexpr int kCsvFormatVersion = 1;

struct FrameInfo {
  int index = 0;
  double time = 0.0;
  std::int64_t step = 0;
  std::string file;
};

/// Sidecar metadata for a run directory (manifest.json).
///
/// Frame files hold the raw field: little-endian IEEE-754 values of `dtype`
/// ("float32" or "float64"), row-major with axis 0 slowest, no header.
struct Manifest {
  int format_version = kFrameFormatVersion;
  std::string status = "incomplete";  ///< "complete", "incomplete" or "diverged"
  std::string error;
  GridSpec grid;
  std::string dtype = "float64";
  std::optional<FrameInfo> initial;
  std::vector<FrameInfo> frames;
  std::map<std::string, std::string> config;
  std::string diagnostics_file = "diagnostics.csv";
  std::vector<std::string> warnings;
};

void write_manifest(const std::filesystem::path& path, const Manifest& manifest);
/// Throws MissingFileError if absent, IoError if malformed.
Manifest read_manifest(const std::filesystem::path& path);

template <class Real>
void write_frame(const std::filesystem::path& path, const RealField<Real>& f);

/// Loads one frame file described by `manifest`, widening to double.
RealField<double> read_frame(const std::filesystem::path& path, const Manifest& manifest,
                             double time = 0.0);

/// `time,free_energy,mean,max_abs` rows behind a `# format_version=1` line.
/// free_energy is left empty for models without a functional.
class DiagnosticsCsv {
public:
  explicit DiagnosticsCsv(const std::filesystem::path& path);
  void append(const DiagnosticsRecord& r);

private:
  std::ofstream out_;
  std::filesystem::path path_;
};

/// Parses a diagnostics CSV written by DiagnosticsCsv.
std::vector<DiagnosticsRecord> read_diagnostics(const std::filesystem::path& path);

}  // namespace specflow::harness
