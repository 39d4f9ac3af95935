#include "specflow/harness/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "specflow/errors.hpp"

namespace specflow::harness {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::int64_t parse_integer(std::string_view text, const std::string& key) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("expected an integer for '" + key + "', got '" + std::string(text) + "'",
                      key);
  }
  return v;
}

std::uint64_t parse_unsigned(std::string_view text, const std::string& key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("expected an unsigned integer for '" + key + "', got '" +
                          std::string(text) + "'",
                      key);
  }
  return v;
}

const std::set<std::string>& initial_extra_keys() {
  static const std::set<std::string> keys = {"x0",        "width",  "intensity", "amplitude",
                                             "center",    "epsilon", "k0"};
  return keys;
}

}  // namespace

double parse_real(std::string_view text, const std::string& key) {
  text = trim(text);
  double factor = 1.0;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "pi") {
    factor = std::numbers::pi;
    text = trim(text.substr(0, text.size() - 2));
    if (!text.empty() && text.back() == '*') text = trim(text.substr(0, text.size() - 1));
    if (text.empty() || text == "+") return factor;
    if (text == "-") return -factor;
  }
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("expected a number for '" + key + "', got '" + std::string(text) + "'", key);
  }
  return v * factor;
}

InitialKind parse_initial_kind(std::string_view name) {
  if (name == "uniform_noise") return InitialKind::UniformNoise;
  if (name == "top_hat") return InitialKind::TopHat;
  if (name == "gaussian_bump") return InitialKind::GaussianBump;
  if (name == "cosine_probe") return InitialKind::CosineProbe;
  throw ConfigError("unknown initial condition '" + std::string(name) +
                        "'; valid: uniform_noise, top_hat, gaussian_bump, cosine_probe",
                    "ic.kind");
}

std::string_view to_string(InitialKind kind) {
  switch (kind) {
    case InitialKind::UniformNoise:
      return "uniform_noise";
    case InitialKind::TopHat:
      return "top_hat";
    case InitialKind::GaussianBump:
      return "gaussian_bump";
    case InitialKind::CosineProbe:
      return "cosine_probe";
  }
  return "?";
}

double InitialConditionSpec::extra_or(const std::string& key, double fallback) const {
  auto it = extra.find(key);
  return it == extra.end() ? fallback : it->second;
}

GridSpec RunConfig::grid() const { return build_grid(dim, n, length, origin, precision); }

RunConfig parse_config(std::string_view text) {
  RunConfig c;
  std::set<std::string> seen;
  bool have_model = false, have_n = false, have_length = false, have_h = false,
       have_t_final = false, have_frame = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'",
                        std::string(line));
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(line_no) + ": empty key", "");
    }
    if (value.empty()) throw ConfigError("missing value for '" + key + "'", key);
    if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'", key);

    if (key == "version") {
      if (parse_integer(value, key) != kConfigFormatVersion) {
        throw ConfigError("unsupported config version '" + std::string(value) + "'", key);
      }
    } else if (key == "model.name") {
      c.model_name = std::string(value);
      have_model = true;
    } else if (key.starts_with("model.")) {
      c.model_params[key.substr(6)] = parse_real(value, key);
    } else if (key == "grid.dim") {
      c.dim = static_cast<int>(parse_integer(value, key));
    } else if (key == "grid.n") {
      c.n = parse_integer(value, key);
      have_n = true;
    } else if (key == "grid.length") {
      c.length = parse_real(value, key);
      have_length = true;
    } else if (key == "grid.origin") {
      c.origin = parse_real(value, key);
    } else if (key == "time.method") {
      c.method = parse_method(value);
    } else if (key == "time.h") {
      c.h = parse_real(value, key);
      have_h = true;
    } else if (key == "time.t_final") {
      c.t_final = parse_real(value, key);
      have_t_final = true;
    } else if (key == "time.frame_interval") {
      c.frame_interval = parse_real(value, key);
      have_frame = true;
    } else if (key == "ic.kind") {
      c.ic.kind = parse_initial_kind(value);
    } else if (key == "ic.eta0") {
      c.ic.eta0 = parse_real(value, key);
    } else if (key == "ic.noise_amp") {
      c.ic.noise_amp = parse_real(value, key);
    } else if (key.starts_with("ic.") && initial_extra_keys().contains(key.substr(3))) {
      c.ic.extra[key.substr(3)] = parse_real(value, key);
    } else if (key == "run.seed") {
      c.seed = parse_unsigned(value, key);
    } else if (key == "run.output_dir") {
      c.output_dir = std::string(value);
    } else if (key == "run.precision") {
      c.precision = parse_precision(value);
    } else {
      throw ConfigError("unknown key '" + key + "'", key);
    }
  }

  if (!have_model) throw ConfigError("missing required key 'model.name'", "model.name");
  if (!have_n) throw ConfigError("missing required key 'grid.n'", "grid.n");
  if (!have_length) throw ConfigError("missing required key 'grid.length'", "grid.length");
  if (!have_h) throw ConfigError("missing required key 'time.h'", "time.h");
  if (!have_t_final) throw ConfigError("missing required key 'time.t_final'", "time.t_final");
  if (!have_frame) c.frame_interval = c.t_final;
  validate(c);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("cannot open config file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::int64_t step_count(double t, double h, const std::string& key) {
  const double ratio = t / h;
  const double rounded = std::round(ratio);
  if (!std::isfinite(ratio) || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
    throw ConfigError("'" + key + "' (" + format_real(t) + ") is not a multiple of the step " +
                          format_real(h),
                      key);
  }
  return static_cast<std::int64_t>(rounded);
}

void validate(const RunConfig& c) {
  bool known = false;
  for (const auto& name : model_names()) known = known || name == c.model_name;
  if (!known) {
    throw ConfigError("unknown model '" + c.model_name + "'; valid: ch, pfc, advdiff, burgers",
                      "model.name");
  }
  const GridSpec grid = c.grid();
  (void)make_model(c.model_name, c.model_params, wavenumbers(grid));
  if (!(c.h > 0.0) || !std::isfinite(c.h)) throw ConfigError("time.h must be positive", "time.h");
  if (!(c.frame_interval >= c.h)) {
    throw ConfigError("time.frame_interval must be >= time.h", "time.frame_interval");
  }
  if (!(c.t_final >= c.frame_interval) || !std::isfinite(c.t_final)) {
    throw ConfigError("time.t_final must be >= time.frame_interval", "time.t_final");
  }
  step_count(c.t_final, c.h, "time.t_final");
  if (!(c.ic.noise_amp >= 0.0)) throw ConfigError("ic.noise_amp must be >= 0", "ic.noise_amp");
  if (c.ic.kind == InitialKind::TopHat && !(c.ic.extra_or("width", 0.2) > 0.0)) {
    throw ConfigError("ic.width must be positive", "ic.width");
  }
}

std::map<std::string, std::string> to_key_values(const RunConfig& c) {
  std::map<std::string, std::string> kv;
  kv["version"] = std::to_string(kConfigFormatVersion);
  kv["model.name"] = c.model_name;
  for (const auto& [k, v] : c.model_params) kv["model." + k] = format_real(v);
  kv["grid.dim"] = std::to_string(c.dim);
  kv["grid.n"] = std::to_string(c.n);
  kv["grid.length"] = format_real(c.length);
  kv["grid.origin"] = format_real(c.origin);
  kv["time.method"] = std::string(to_string(c.method));
  kv["time.h"] = format_real(c.h);
  kv["time.t_final"] = format_real(c.t_final);
  kv["time.frame_interval"] = format_real(c.frame_interval);
  kv["ic.kind"] = std::string(to_string(c.ic.kind));
  kv["ic.eta0"] = format_real(c.ic.eta0);
  kv["ic.noise_amp"] = format_real(c.ic.noise_amp);
  for (const auto& [k, v] : c.ic.extra) kv["ic." + k] = format_real(v);
  kv["run.seed"] = std::to_string(c.seed);
  kv["run.output_dir"] = c.output_dir.string();
  kv["run.precision"] = std::string(to_string(c.precision));
  return kv;
}

std::string to_text(const RunConfig& c) {
  std::ostringstream os;
  for (const auto& [k, v] : to_key_values(c)) os << k << " = " << v << '\n';
  return os.str();
}

}  // namespace specflow::harness
