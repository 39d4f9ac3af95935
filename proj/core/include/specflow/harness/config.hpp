#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include "specflow/grid.hpp"
#include "specflow/integrators.hpp"

namespace specflow::harness {

inline constexpr int kConfigFormatVersion = 1;

enum class InitialKind { UniformNoise, TopHat, GaussianBump, CosineProbe };

InitialKind parse_initial_kind(std::string_view name);
std::string_view to_string(InitialKind kind);

/// Initial condition. `extra` holds the kind-specific settings:
///   top_hat       x0 (default: grid origin), width (0.2), intensity (1.0)
///   gaussian_bump amplitude (1.0), center (0.0)
///   cosine_probe  epsilon (0.01), k0 (1.0)
struct InitialConditionSpec {
  InitialKind kind = InitialKind::UniformNoise;
  double eta0 = 0.0;
  double noise_amp = 0.0;
  std::map<std::string, double> extra;

  double extra_or(const std::string& key, double fallback) const;
};

/// Everything needed to reproduce one simulation.
struct RunConfig {
  std::string model_name;
  std::map<std::string, double> model_params;

  int dim = 2;
  std::int64_t n = 64;
  double length = 1.0;
  double origin = 0.0;

  Method method = Method::Etd;
  double h = 0.01;
  double t_final = 1.0;
  double frame_interval = 1.0;

  std::uint64_t seed = 12345;
  InitialConditionSpec ic;
  std::filesystem::path output_dir = "output";
  Precision precision = Precision::Double;

  GridSpec grid() const;
};

/// Parses the flat `section.key = value` format. Lines starting with '#' and
/// blank lines are ignored; trailing `# ...` comments are stripped. Real
/// values accept a `pi` suffix ("16*pi", "-pi", "2pi"). Throws ConfigError
/// naming the offending key.
RunConfig parse_config(std::string_view text);

/// Reads and parses a config file. A missing file raises MissingFileError.
RunConfig load_config(const std::filesystem::path& path);

/// Checks cross-field invariants (h > 0, frame_interval >= h, ...).
void validate(const RunConfig& config);

/// Canonical key/value echo; parse_config(to_text(c)) reproduces c.
std::map<std::string, std::string> to_key_values(const RunConfig& config);
std::string to_text(const RunConfig& config);

/// Number of steps of size h covering [0, t]; t must be a multiple of h to
/// within 1e-9 relative, otherwise ConfigError on `key`.
std::int64_t step_count(double t, double h, const std::string& key);

/// Parses a real with the optional `pi` suffix. Throws ConfigError on `key`.
double parse_real(std::string_view text, const std::string& key);

}  // namespace specflow::harness
