#include "specflow/grid.hpp"

#include <cmath>
#include <string>

#include "specflow/errors.hpp"

namespace specflow {

Precision parse_precision(std::string_view name) {
  if (name == "double" || name == "float64") return Precision::Double;
  if (name == "single" || name == "float32") return Precision::Single;
  throw ConfigError("unknown precision '" + std::string(name) + "'; valid: single, double",
                    "run.precision");
}

std::string_view to_string(Precision p) {
  return p == Precision::Double ? "double" : "single";
}

std::size_t GridSpec::total_points() const {
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= n[a];
  return total;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= dx(a);
  return v;
}

double GridSpec::volume() const {
  double v = 1.0;
  for (int a = 0; a < dim; ++a) v *= length[a];
  return v;
}

namespace {
bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }
}  // namespace

void validate(const GridSpec& grid) {
  if (grid.dim != 1 && grid.dim != 2) {
    throw ConfigError("grid dimension must be 1 or 2, got " + std::to_string(grid.dim),
                      "grid.dim");
  }
  for (int a = 0; a < grid.dim; ++a) {
    if (grid.n[a] < 4 || !is_power_of_two(grid.n[a])) {
      throw ConfigError("grid size must be a power of two >= 4, got " + std::to_string(grid.n[a]),
                        "grid.n");
    }
    if (!(grid.length[a] > 0.0) || !std::isfinite(grid.length[a])) {
      throw ConfigError("grid length must be positive and finite", "grid.length");
    }
    if (!std::isfinite(grid.origin[a])) {
      throw ConfigError("grid origin must be finite", "grid.origin");
    }
  }
}

GridSpec build_grid(int dim, std::int64_t n_points, double length, double origin,
                    Precision precision) {
  if (n_points < 0) {
    throw ConfigError("grid size must be a power of two >= 4, got " + std::to_string(n_points),
                      "grid.n");
  }
  GridSpec g;
  g.dim = dim;
  g.precision = precision;
  for (int a = 0; a < 2; ++a) {
    g.n[a] = a < dim ? static_cast<std::size_t>(n_points) : 1;
    g.length[a] = length;
    g.origin[a] = origin;
  }
  validate(g);
  return g;
}

bool same_geometry(const GridSpec& a, const GridSpec& b) {
  if (a.dim != b.dim) return false;
  for (int i = 0; i < a.dim; ++i) {
    if (a.n[i] != b.n[i] || a.length[i] != b.length[i] || a.origin[i] != b.origin[i]) return false;
  }
  return true;
}

}  // namespace specflow
