#include "specflow/harness/frames.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <iomanip>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>

#include "specflow/errors.hpp"

namespace specflow::harness {

using nlohmann::json;

namespace {

json frame_to_json(const FrameInfo& f) {
  return {{"index", f.index}, {"time", f.time}, {"step", f.step}, {"file", f.file}};
}

FrameInfo frame_from_json(const json& j) {
  FrameInfo f;
  f.index = j.at("index").get<int>();
  f.time = j.at("time").get<double>();
  f.step = j.at("step").get<std::int64_t>();
  f.file = j.at("file").get<std::string>();
  return f;
}

template <class T>
T byteswap_value(T v) {
  unsigned char bytes[sizeof(T)];
  std::memcpy(bytes, &v, sizeof(T));
  for (std::size_t i = 0; i < sizeof(T) / 2; ++i) std::swap(bytes[i], bytes[sizeof(T) - 1 - i]);
  std::memcpy(&v, bytes, sizeof(T));
  return v;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

void write_manifest(const std::filesystem::path& path, const Manifest& m) {
  json j;
  j["format"] = "specflow-frames";
  j["format_version"] = m.format_version;
  j["status"] = m.status;
  j["error"] = m.error.empty() ? json(nullptr) : json(m.error);
  j["dim"] = m.grid.dim;
  json shape = json::array(), length = json::array(), origin = json::array();
  for (int a = 0; a < m.grid.dim; ++a) {
    shape.push_back(m.grid.n[a]);
    length.push_back(m.grid.length[a]);
    origin.push_back(m.grid.origin[a]);
  }
  j["shape"] = shape;
  j["length"] = length;
  j["origin"] = origin;
  j["dtype"] = m.dtype;
  j["byte_order"] = "little";
  j["layout"] = "row-major";
  j["initial"] = m.initial ? frame_to_json(*m.initial) : json(nullptr);
  json frames = json::array();
  for (const auto& f : m.frames) frames.push_back(frame_to_json(f));
  j["frames"] = frames;
  j["config"] = m.config;
  j["diagnostics"] = m.diagnostics_file;
  j["diagnostics_format_version"] = kCsvFormatVersion;
  j["warnings"] = m.warnings;

  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw IoError("cannot write manifest '" + tmp.string() + "'");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing manifest '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move manifest into place: " + ec.message());
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("cannot open manifest '" + path.string() + "'");
  try {
    const json j = json::parse(in);
    Manifest m;
    m.format_version = j.at("format_version").get<int>();
    if (m.format_version != kFrameFormatVersion) {
      throw IoError("unsupported manifest format_version " + std::to_string(m.format_version));
    }
    m.status = j.at("status").get<std::string>();
    if (!j.at("error").is_null()) m.error = j.at("error").get<std::string>();
    m.grid.dim = j.at("dim").get<int>();
    for (int a = 0; a < m.grid.dim; ++a) {
      m.grid.n[a] = j.at("shape").at(a).get<std::size_t>();
      m.grid.length[a] = j.at("length").at(a).get<double>();
      m.grid.origin[a] = j.at("origin").at(a).get<double>();
    }
    m.dtype = j.at("dtype").get<std::string>();
    m.grid.precision = m.dtype == "float32" ? Precision::Single : Precision::Double;
    validate(m.grid);
    if (!j.at("initial").is_null()) m.initial = frame_from_json(j.at("initial"));
    for (const auto& f : j.at("frames")) m.frames.push_back(frame_from_json(f));
    m.config = j.at("config").get<std::map<std::string, std::string>>();
    m.diagnostics_file = j.value("diagnostics", std::string("diagnostics.csv"));
    if (j.contains("warnings")) m.warnings = j.at("warnings").get<std::vector<std::string>>();
    return m;
  } catch (const json::exception& e) {
    throw IoError("malformed manifest '" + path.string() + "': " + e.what());
  } catch (const ConfigError& e) {
    throw IoError("manifest '" + path.string() + "' has an invalid grid: " + e.what());
  }
}

template <class Real>
void write_frame(const std::filesystem::path& path, const RealField<Real>& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open frame file '" + path.string() + "' for writing");
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(Real)));
  } else {
    for (Real v : f.values) {
      const Real s = byteswap_value(v);
      out.write(reinterpret_cast<const char*>(&s), sizeof(Real));
    }
  }
  if (!out) throw IoError("failed writing frame file '" + path.string() + "'");
}

template void write_frame(const std::filesystem::path&, const RealField<float>&);
template void write_frame(const std::filesystem::path&, const RealField<double>&);

namespace {

template <class Real>
void read_values(std::ifstream& in, std::vector<double>& out, const std::filesystem::path& path) {
  std::vector<Real> raw(out.size());
  in.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(raw.size() * sizeof(Real)));
  if (in.gcount() != static_cast<std::streamsize>(raw.size() * sizeof(Real)) ||
      in.peek() != std::char_traits<char>::eof()) {
    throw IoError("frame file '" + path.string() + "' has the wrong size");
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Real v = raw[i];
    if constexpr (std::endian::native != std::endian::little) v = byteswap_value(v);
    out[i] = static_cast<double>(v);
  }
}

}  // namespace

RealField<double> read_frame(const std::filesystem::path& path, const Manifest& manifest,
                             double time) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MissingFileError("cannot open frame file '" + path.string() + "'");
  GridSpec g = manifest.grid;
  g.precision = Precision::Double;
  RealField<double> f(g, time);
  if (manifest.dtype == "float64") {
    read_values<double>(in, f.values, path);
  } else if (manifest.dtype == "float32") {
    read_values<float>(in, f.values, path);
  } else {
    throw IoError("unsupported frame dtype '" + manifest.dtype + "'");
  }
  return f;
}

DiagnosticsCsv::DiagnosticsCsv(const std::filesystem::path& path) : out_(path), path_(path) {
  if (!out_) throw IoError("cannot open diagnostics file '" + path.string() + "'");
  out_ << "# format_version=" << kCsvFormatVersion << '\n' << "time,free_energy,mean,max_abs\n";
  out_.flush();
}

void DiagnosticsCsv::append(const DiagnosticsRecord& r) {
  out_ << format_double(r.time) << ',';
  if (r.free_energy) out_ << format_double(*r.free_energy);
  out_ << ',' << format_double(r.mean_value) << ',' << format_double(r.max_abs) << '\n';
  out_.flush();
  if (!out_) throw IoError("failed writing diagnostics file '" + path_.string() + "'");
}

std::vector<DiagnosticsRecord> read_diagnostics(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFileError("cannot open diagnostics file '" + path.string() + "'");
  std::vector<DiagnosticsRecord> rows;
  std::string line;
  bool header_seen = false;
  auto parse = [&](std::string_view s) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw IoError("malformed number '" + std::string(s) + "' in " + path.string());
    }
    return v;
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != "time,free_energy,mean,max_abs") {
        throw IoError("unexpected diagnostics header in " + path.string());
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> cols;
    std::string_view rest(line);
    for (;;) {
      const auto comma = rest.find(',');
      cols.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (cols.size() != 4) throw IoError("diagnostics row with wrong column count in " + path.string());
    DiagnosticsRecord r;
    r.time = parse(cols[0]);
    if (!cols[1].empty()) r.free_energy = parse(cols[1]);
    r.mean_value = parse(cols[2]);
    r.max_abs = parse(cols[3]);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace specflow::harness
