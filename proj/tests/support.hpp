#pragma once

#include <atomic>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unistd.h>
#include <vector>

#include "specflow/field.hpp"
#include "specflow/grid.hpp"

namespace specflow::test {

inline constexpr double kPi = 3.14159265358979323846;

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
  explicit TempDir(const std::string& tag) {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("specflow_" + tag + "_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

inline RealField<double> sample(const GridSpec& g,
                                const std::function<double(double, double)>& fn) {
  RealField<double> f(g);
  const std::size_t ny = g.dim == 2 ? g.n[1] : 1;
  for (std::size_t i = 0; i < g.n[0]; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double x = g.coordinate(0, i);
      const double y = g.dim == 2 ? g.coordinate(1, j) : 0.0;
      f[i * ny + j] = fn(x, y);
    }
  }
  return f;
}

inline RealField<double> random_field(const GridSpec& g, std::uint64_t seed, double amp = 1.0,
                                      double offset = 0.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amp, amp);
  RealField<double> f(g);
  for (auto& v : f.values) v = offset + u(rng);
  return f;
}

inline double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double norm2(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

}  // namespace specflow::test
