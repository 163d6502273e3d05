#pragma once

#include <complex>
#include <vector>

#include "fracwave/multiplier.hpp"

namespace fracwave {

/// What the v_hat array of a SpectralState holds: the prescribed initial
/// velocity spectrum, or the exact time derivative of u_hat after evolution.
/// The two coincide at t = 0; the mode ODE is second order, so the pair
/// (u_hat, du_hat/dt) is the natural re-evolvable state either way.
enum class VelocityRole { initial_velocity, time_derivative };

/// Fourier-side state of the wave field on a uniform, centered frequency
/// grid. When real_field is set the represented field is real-valued and
/// Hermitian symmetry u_hat(-xi) = conj(u_hat(xi)) is enforced on paired
/// bins (the lone -Nyquist bin of an even-length grid must then be real).
struct SpectralState {
  std::vector<double> xi;
  std::vector<std::complex<double>> u_hat;
  std::vector<std::complex<double>> v_hat;
  FractionalOrder order;
  double time = 0.0;
  bool real_field = false;
  VelocityRole v_role = VelocityRole::initial_velocity;
};

/// Throws std::invalid_argument if array lengths disagree or, when the
/// real_field flag is set, Hermitian symmetry is violated beyond tol.
void validate_state(const SpectralState& state, double hermitian_tol = 1e-9);

/// cos(h(xi) t) for t >= 0, 0 for t < 0. The Heaviside factor takes the
/// value 1 at t = 0 so that evolution at t = 0 returns the initial data.
double e0_hat(const FractionalOrder& order, double xi, double t);

/// sin(h(xi) t)/h(xi) for t >= 0 (0 for t < 0), with the removable value t
/// at xi = 0. For |h t| < 1e-8 the series t(1 - (ht)^2/6) avoids the
/// cancellation in sin(ht)/h.
double e1_hat(const FractionalOrder& order, double xi, double t);

/// One-sided (half-wave) propagation factor exp(i t h(xi)); unit modulus.
std::complex<double> half_wave_hat(const FractionalOrder& order, double xi,
                                   double t);

/// Exact evolution of a t = 0 state by t >= 0:
///   u_hat(t) = u0_hat cos(h t) + v0_hat sin(h t)/h
///   v_hat(t) = du_hat/dt = -u0_hat h sin(h t) + v0_hat cos(h t)
/// Hermitian symmetry is preserved. Rejects t < 0 (the solution vanishes
/// identically there) and non-initial input states.
SpectralState evolve(const SpectralState& state0, double t);

}  // namespace fracwave
