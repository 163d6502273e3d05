#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "fracwave/propagator.hpp"

using namespace fracwave;

namespace {

constexpr double kPi = std::numbers::pi;

SpectralState random_state(const FractionalOrder& order, std::size_t n,
                           unsigned seed, bool zero_velocity = false) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  SpectralState state{std::vector<double>(n),
                      std::vector<std::complex<double>>(n),
                      std::vector<std::complex<double>>(n),
                      order,
                      0.0,
                      false,
                      VelocityRole::initial_velocity};
  const double dxi = 0.25;
  for (std::size_t k = 0; k < n; ++k) {
    state.xi[k] = (static_cast<double>(k) - static_cast<double>(n) / 2.0) * dxi;
    state.u_hat[k] = {dist(rng), dist(rng)};
    state.v_hat[k] = zero_velocity ? std::complex<double>{0.0, 0.0}
                                   : std::complex<double>{dist(rng), dist(rng)};
  }
  return state;
}

}  // namespace

TEST_CASE("e0 reference values") {
  const FractionalOrder order(2.0);
  CHECK(e0_hat(order, 1.0, 0.0) == 1.0);
  CHECK(e0_hat(order, 1.0, kPi * std::sqrt(2.0)) ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e0_hat(order, 1.0, -1.0) == 0.0);
  CHECK(e0_hat(FractionalOrder(1.5), 17.0, -0.25) == 0.0);
}

TEST_CASE("e1 reference values and small-argument branch") {
  const FractionalOrder order(2.0);
  CHECK(e1_hat(order, 0.0, 3.0) == 3.0);
  CHECK(e1_hat(order, 5.0, 0.0) == 0.0);
  CHECK(e1_hat(order, 0.0, 0.0) == 0.0);
  CHECK(e1_hat(order, 1.0, kPi * std::sqrt(2.0) / 2.0) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(e1_hat(order, 1.0, -2.0) == 0.0);
  // h*t below the guard threshold: value is t to machine precision
  CHECK(e1_hat(order, 1e-12, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("e0 is the time derivative of e1") {
  const double step = 1e-6;
  for (double alpha : {1.5, 2.0, 2.5}) {
    const FractionalOrder order(alpha);
    for (double xi : {0.0, 0.3, 1.0, 5.0, 20.0}) {
      for (double t : {0.5, 3.0, 10.0}) {
        const double fd =
            (e1_hat(order, xi, t + step) - e1_hat(order, xi, t - step)) /
            (2.0 * step);
        CHECK(std::abs(fd - e0_hat(order, xi, t)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("pythagorean identity e0^2 + (h e1)^2 = 1 for t >= 0") {
  for (double alpha : {1.5, 2.0, 2.5}) {
    const FractionalOrder order(alpha);
    for (double xi : {0.0, 0.05, 1.0, 7.0, 42.0}) {
      for (double t : {0.0, 0.1, 1.0, 12.0, 25.0}) {
        const double h = dispersion_symbol(order, xi);
        const double c = e0_hat(order, xi, t);
        const double s = h * e1_hat(order, xi, t);
        CHECK(std::abs(c * c + s * s - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("e1 bounds: |e1| <= min(t, sqrt(1+a|xi|^alpha)/|xi|)") {
  for (double alpha : {1.5, 2.5}) {
    const FractionalOrder order(alpha);
    for (double xi : {0.2, 1.0, 4.0, 30.0}) {
      for (double t : {0.1, 1.0, 10.0, 25.0}) {
        const double value = std::abs(e1_hat(order, xi, t));
        const double inv_h =
            std::sqrt(1.0 + order.coefficient() *
                                std::pow(xi, order.alpha())) /
            xi;
        CHECK(value <= t + 1e-15);
        CHECK(value <= inv_h * (1.0 + 1e-15));
      }
    }
  }
}

TEST_CASE("half-wave factor has unit modulus and the expected phase") {
  const FractionalOrder order(2.0);
  CHECK(half_wave_hat(order, 0.0, 17.0) == std::complex<double>{1.0, 0.0});
  CHECK(std::abs(half_wave_hat(order, 1.0, kPi * std::sqrt(2.0)) -
                 std::complex<double>{-1.0, 0.0}) < 1e-12);
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> dist(-40.0, 40.0);
  for (int i = 0; i < 200; ++i) {
    const double m = std::abs(half_wave_hat(order, dist(rng), dist(rng)));
    CHECK(std::abs(m - 1.0) <= 1e-15);
  }
}

TEST_CASE("evolve at t = 0 is the identity") {
  const FractionalOrder order(1.5);
  const SpectralState s0 = random_state(order, 32, 5);
  const SpectralState s = evolve(s0, 0.0);
  for (std::size_t k = 0; k < s0.xi.size(); ++k) {
    CHECK(s.u_hat[k] == s0.u_hat[k]);
    CHECK(s.v_hat[k] == s0.v_hat[k]);
  }
  CHECK(s.v_role == VelocityRole::time_derivative);
}

TEST_CASE("evolve contracts modes when v0 = 0") {
  const FractionalOrder order(2.5);
  const SpectralState s0 = random_state(order, 64, 9, true);
  for (double t : {0.3, 2.0, 25.0}) {
    const SpectralState s = evolve(s0, t);
    for (std::size_t k = 0; k < s0.xi.size(); ++k) {
      CHECK(std::abs(s.u_hat[k]) <= std::abs(s0.u_hat[k]) * (1.0 + 1e-15));
    }
  }
}

TEST_CASE("two-step evolution equals one-step (mode ODE group property)") {
  const FractionalOrder order(1.8);
  const SpectralState s0 = random_state(order, 48, 21);
  const double t1 = 1.7, t2 = 3.9;
  SpectralState mid = evolve(s0, t1);
  mid.time = 0.0;  // restart the clock; (u_hat, du/dt) is a valid initial pair
  const SpectralState two_step = evolve(mid, t2);
  const SpectralState one_step = evolve(s0, t1 + t2);
  for (std::size_t k = 0; k < s0.xi.size(); ++k) {
    CHECK(std::abs(two_step.u_hat[k] - one_step.u_hat[k]) <= 1e-12);
    CHECK(std::abs(two_step.v_hat[k] - one_step.v_hat[k]) <= 1e-12);
  }
}

TEST_CASE("per-mode energy h^2|u|^2 + |du/dt|^2 is conserved") {
  const FractionalOrder order(2.2);
  const SpectralState s0 = random_state(order, 64, 33);
  std::vector<double> energy0(s0.xi.size());
  for (std::size_t k = 0; k < s0.xi.size(); ++k) {
    const double h = dispersion_symbol(order, s0.xi[k]);
    energy0[k] = h * h * std::norm(s0.u_hat[k]) + std::norm(s0.v_hat[k]);
  }
  for (double t : {0.5, 5.0, 25.0}) {
    const SpectralState s = evolve(s0, t);
    for (std::size_t k = 0; k < s0.xi.size(); ++k) {
      const double h = dispersion_symbol(order, s0.xi[k]);
      const double energy = h * h * std::norm(s.u_hat[k]) + std::norm(s.v_hat[k]);
      CHECK(std::abs(energy - energy0[k]) <= 1e-12 * (energy0[k] + 1e-300));
    }
  }
}

TEST_CASE("evolve rejects bad inputs") {
  const FractionalOrder order(2.0);
  const SpectralState s0 = random_state(order, 16, 2);
  CHECK_THROWS_AS(evolve(s0, -0.5), std::domain_error);
  SpectralState late = evolve(s0, 1.0);
  CHECK_THROWS_AS(evolve(late, 1.0), std::invalid_argument);

  SpectralState ragged = s0;
  ragged.v_hat.pop_back();
  CHECK_THROWS_AS(evolve(ragged, 1.0), std::invalid_argument);
}

TEST_CASE("evolution preserves Hermitian symmetry of real fields") {
  const FractionalOrder order(2.5);
  const std::size_t n = 16;
  SpectralState state{std::vector<double>(n),
                      std::vector<std::complex<double>>(n),
                      std::vector<std::complex<double>>(n),
                      order,
                      0.0,
                      true,
                      VelocityRole::initial_velocity};
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    state.xi[k] = (static_cast<double>(k) - 8.0) * 0.5;
  }
  state.u_hat[0] = dist(rng);  // lone -Nyquist bin stays real
  state.v_hat[0] = dist(rng);
  state.u_hat[8] = dist(rng);  // xi = 0 bin
  state.v_hat[8] = dist(rng);
  for (std::size_t k = 1; k < 8; ++k) {
    state.u_hat[k] = {dist(rng), dist(rng)};
    state.v_hat[k] = {dist(rng), dist(rng)};
    state.u_hat[n - k] = std::conj(state.u_hat[k]);
    state.v_hat[n - k] = std::conj(state.v_hat[k]);
  }
  validate_state(state);
  const SpectralState evolved = evolve(state, 7.3);  // throws on violation
  CHECK(evolved.real_field);
  CHECK(std::abs(evolved.u_hat[3] - std::conj(evolved.u_hat[n - 3])) < 1e-14);
}
