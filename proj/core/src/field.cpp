#include "fracwave/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracwave {

namespace {

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

SpatialGrid::SpatialGrid(double half_width_, std::size_t n_)
    : half_width(half_width_), n(n_) {
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw std::domain_error("grid half_width must be positive and finite");
  }
  if (!power_of_two(n) || n < 8) {
    throw std::invalid_argument(
        "grid point count must be a power of two >= 8, got " +
        std::to_string(n));
  }
  const double step = dx();
  const double freq_step = std::numbers::pi / half_width;
  x.resize(n);
  xi.resize(n);
  const double half = static_cast<double>(n) / 2.0;
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = -half_width + static_cast<double>(i) * step;
    xi[i] = (static_cast<double>(i) - half) * freq_step;
  }
}

double SpatialGrid::dxi() const noexcept {
  return std::numbers::pi / half_width;
}

double SpatialGrid::nyquist() const noexcept {
  return std::numbers::pi / dx();
}

SpatialGrid make_grid(double half_width, std::size_t n) {
  return SpatialGrid(half_width, n);
}

DataComponent DataComponent::gaussian(double width_a) {
  if (!(width_a > 0.0)) {
    throw std::domain_error("gaussian regularization width must be positive");
  }
  DataComponent c;
  c.kind = Kind::gaussian_delta;
  c.width = width_a;
  return c;
}

DataComponent DataComponent::point_mass() {
  DataComponent c;
  c.kind = Kind::point_mass;
  return c;
}

DataComponent DataComponent::from_samples(std::vector<double> values) {
  DataComponent c;
  c.kind = Kind::samples;
  c.samples = std::move(values);
  return c;
}

std::string describe(const DataComponent& component) {
  switch (component.kind) {
    case DataComponent::Kind::zero:
      return "zero";
    case DataComponent::Kind::gaussian_delta:
      return "gaussian_delta(a=" + std::to_string(component.width) + ")";
    case DataComponent::Kind::point_mass:
      return "point_mass";
    case DataComponent::Kind::samples:
      return "samples(n=" + std::to_string(component.samples.size()) + ")";
  }
  return "unknown";
}

}  // namespace fracwave
