#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace specflow {

enum class Precision { Single, Double };

Precision parse_precision(std::string_view name);
std::string_view to_string(Precision p);

/// Uniform periodic sampling of a box in 1 or 2 dimensions.
///
/// Point j along an axis sits at origin + j*dx with dx = length/n; the right
/// endpoint is the periodic image of point 0 and is not stored. Entries of the
/// per-axis arrays beyond `dim` are unused. 2D data is row-major with axis 0
/// as the slow index.
struct GridSpec {
  int dim = 1;
  std::array<std::size_t, 2> n{4, 1};
  std::array<double, 2> length{1.0, 1.0};
  std::array<double, 2> origin{0.0, 0.0};
  Precision precision = Precision::Double;

  double dx(int axis = 0) const { return length[axis] / static_cast<double>(n[axis]); }
  double coordinate(int axis, std::size_t j) const {
    return origin[axis] + static_cast<double>(j) * dx(axis);
  }
  std::size_t total_points() const;
  /// Product of the spacings: the quadrature weight of one grid point.
  double cell_volume() const;
  double volume() const;

  bool operator==(const GridSpec&) const = default;
};

/// Builds an isotropic grid. Throws ConfigError unless dim is 1 or 2,
/// n_points is a power of two >= 4 and length > 0.
GridSpec build_grid(int dim, std::int64_t n_points, double length, double origin = 0.0,
                    Precision precision = Precision::Double);

/// Re-checks the invariants of a hand-assembled GridSpec.
void validate(const GridSpec& grid);

/// True when the two grids sample the same points (precision ignored).
bool same_geometry(const GridSpec& a, const GridSpec& b);

}  // namespace specflow
