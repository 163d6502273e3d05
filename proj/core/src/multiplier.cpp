#include "fracwave/multiplier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fracwave {

double nonlocality_coefficient(double alpha) {
  if (!(alpha > 1.0 && alpha < 3.0)) {
    throw std::domain_error(
        "fractional order alpha must lie strictly inside the open interval "
        "(1,3), got " +
        std::to_string(alpha));
  }
  return -std::cos(alpha * std::numbers::pi / 2.0);
}

FractionalOrder::FractionalOrder(double alpha)
    : alpha_(alpha), a_alpha_(nonlocality_coefficient(alpha)) {}

double dispersion_symbol(const FractionalOrder& order, double xi) {
  const double axi = std::abs(xi);
  if (axi == 0.0) return 0.0;
  return axi / std::sqrt(1.0 + order.coefficient() * std::pow(axi, order.alpha()));
}

AuxiliarySymbols auxiliary_symbols(const FractionalOrder& order, double xi,
                                   double tau) {
  const double axi = std::abs(xi);
  const double h = dispersion_symbol(order, xi);
  AuxiliarySymbols out;
  out.p = -tau * tau + h * h;
  if (axi == 0.0) {
    out.g = {0.0, 0.0};
    out.d_frac = 0.0;
  } else {
    const double sign = xi > 0.0 ? 1.0 : -1.0;
    const double pow_term = std::pow(axi, order.alpha());
    out.g = {0.0, sign * std::sqrt(1.0 + order.coefficient() * pow_term)};
    out.d_frac = pow_term * std::cos(order.alpha() * std::numbers::pi / 2.0);
  }
  return out;
}

Velocities velocities(const FractionalOrder& order, double xi) {
  const double axi = std::abs(xi);
  if (axi == 0.0) return {1.0, 1.0};
  const double r = order.coefficient() * std::pow(axi, order.alpha());
  const double root = std::sqrt(1.0 + r);
  const double phase = 1.0 / root;
  const double group = (1.0 + (1.0 - 0.5 * order.alpha()) * r) / (root * root * root);
  return {phase, group};
}

PhysicalParams::PhysicalParams(double ell_, double modulus_, double density_)
    : ell(ell_), modulus(modulus_), density(density_) {
  if (!(ell > 0.0) || !(modulus > 0.0) || !(density > 0.0)) {
    throw std::domain_error(
        "physical parameters (ell, modulus, density) must all be strictly "
        "positive");
  }
}

Dimensionless nondimensionalize(const PhysicalParams& params, double x,
                                double t, double u, double sigma) {
  return {x / params.ell,
          (t / params.ell) * std::sqrt(params.modulus / params.density),
          u / params.ell, sigma / params.modulus};
}

DispersionCurve sample_dispersion(const FractionalOrder& order,
                                  const std::vector<double>& xi) {
  DispersionCurve curve;
  curve.xi = xi;
  curve.omega.reserve(xi.size());
  curve.phase_velocity.reserve(xi.size());
  curve.group_velocity.reserve(xi.size());
  for (double x : xi) {
    curve.omega.push_back(dispersion_symbol(order, x));
    const Velocities v = velocities(order, x);
    curve.phase_velocity.push_back(v.phase);
    curve.group_velocity.push_back(v.group);
  }
  return curve;
}

}  // namespace fracwave
