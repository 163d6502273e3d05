#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fracwave {

/// Uniform spatial grid x_i = -L + i*(2L/n) with the centered dual frequency
/// grid xi_k = (k - n/2)*pi/L. n must be a power of two >= 8; the Nyquist
/// frequency is pi/dx = n*pi/(2L) and bin 0 carries the unpaired -Nyquist.
struct SpatialGrid {
  SpatialGrid(double half_width, std::size_t n);

  double half_width;
  std::size_t n;
  std::vector<double> x;
  std::vector<double> xi;

  double dx() const noexcept { return 2.0 * half_width / static_cast<double>(n); }
  double dxi() const noexcept;
  double nyquist() const noexcept;
};

SpatialGrid make_grid(double half_width, std::size_t n);

/// One component (displacement or velocity) of the initial data.
struct DataComponent {
  enum class Kind { zero, gaussian_delta, point_mass, samples };

  Kind kind = Kind::zero;
  double width = 0.0;            ///< gaussian_delta regularization width a > 0
  std::vector<double> samples;   ///< samples on the grid, Kind::samples only

  static DataComponent zero() { return {}; }
  /// Unit-mass Gaussian (1/(a sqrt(pi))) exp(-x^2/a^2); spectrum exp(-a^2 xi^2/4).
  static DataComponent gaussian(double width_a);
  /// Exact point mass: spectrum identically 1. Real-space output at t = 0 is
  /// distributional and is rejected by the solvers.
  static DataComponent point_mass();
  static DataComponent from_samples(std::vector<double> values);

  bool is_zero() const noexcept { return kind == Kind::zero; }
};

struct InitialData {
  DataComponent u0;
  DataComponent v0;
};

/// Run metadata carried alongside sampled fields and echoed into sidecars.
struct FieldMeta {
  double alpha = 0.0;
  std::string u0_desc;
  std::string v0_desc;
  std::string method;    ///< "spectral" or "quadrature"
  double tolerance = 0.0;
  double grid_half_width = 0.0;
  std::size_t grid_n = 0;
  std::vector<std::string> warnings;
  std::string version;
};

/// Real-space solution samples u(x_i, t_j). Values are stored row-major by
/// time so each requested instant is one contiguous profile.
struct WaveField {
  std::vector<double> x;
  std::vector<double> times;
  std::vector<double> values;
  FieldMeta meta;

  double value(std::size_t ix, std::size_t it) const {
    return values[it * x.size() + ix];
  }
  double& value(std::size_t ix, std::size_t it) {
    return values[it * x.size() + ix];
  }
  const double* profile(std::size_t it) const { return &values[it * x.size()]; }
};

std::string describe(const DataComponent& component);

}  // namespace fracwave
