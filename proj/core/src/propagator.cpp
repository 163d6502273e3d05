#include "fracwave/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace fracwave {

void validate_state(const SpectralState& state, double hermitian_tol) {
  const std::size_t n = state.xi.size();
  if (state.u_hat.size() != n || state.v_hat.size() != n) {
    throw std::invalid_argument(
        "spectral state arrays must share one length with the frequency grid");
  }
  if (!state.real_field || n == 0) return;

  double scale = 0.0;
  for (const auto& c : state.u_hat) scale = std::max(scale, std::abs(c));
  for (const auto& c : state.v_hat) scale = std::max(scale, std::abs(c));
  const double tol = hermitian_tol * (scale + 1.0);

  // Bin k pairs with bin n-k; bin 0 (-Nyquist) is unpaired and the xi = 0
  // bin at n/2 is self-paired, so both must be real.
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t m = n - k;
    if (m <= k) break;
    if (std::abs(state.u_hat[k] - std::conj(state.u_hat[m])) > tol ||
        std::abs(state.v_hat[k] - std::conj(state.v_hat[m])) > tol) {
      throw std::invalid_argument(
          "state flagged as a real field violates Hermitian symmetry");
    }
  }
  for (const std::size_t k : {std::size_t{0}, n / 2}) {
    if (std::abs(state.u_hat[k].imag()) > tol ||
        std::abs(state.v_hat[k].imag()) > tol) {
      throw std::invalid_argument(
          "state flagged as a real field has a complex self-paired bin");
    }
  }
}

double e0_hat(const FractionalOrder& order, double xi, double t) {
  if (t < 0.0) return 0.0;
  return std::cos(dispersion_symbol(order, xi) * t);
}

double e1_hat(const FractionalOrder& order, double xi, double t) {
  if (t < 0.0) return 0.0;
  const double h = dispersion_symbol(order, xi);
  const double s = h * t;
  if (std::abs(s) < 1e-8) return t * (1.0 - s * s / 6.0);
  return std::sin(s) / h;
}

std::complex<double> half_wave_hat(const FractionalOrder& order, double xi,
                                   double t) {
  return std::polar(1.0, dispersion_symbol(order, xi) * t);
}

SpectralState evolve(const SpectralState& state0, double t) {
  if (state0.time != 0.0) {
    throw std::invalid_argument("evolve expects an initial state at time 0");
  }
  if (t < 0.0) {
    throw std::domain_error(
        "evolution time must be nonnegative; the supported solution vanishes "
        "identically for t < 0");
  }
  validate_state(state0);

  SpectralState out = state0;
  out.time = t;
  out.v_role = VelocityRole::time_derivative;
  for (std::size_t k = 0; k < state0.xi.size(); ++k) {
    const double h = dispersion_symbol(state0.order, state0.xi[k]);
    const double c = e0_hat(state0.order, state0.xi[k], t);
    const double s1 = e1_hat(state0.order, state0.xi[k], t);
    const std::complex<double> u0 = state0.u_hat[k];
    const std::complex<double> v0 = state0.v_hat[k];
    out.u_hat[k] = u0 * c + v0 * s1;
    out.v_hat[k] = -u0 * (h * std::sin(h * t)) + v0 * c;
  }
  if (out.real_field) validate_state(out);
  return out;
}

}  // namespace fracwave
