#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracwave/multiplier.hpp"

using namespace fracwave;

namespace {

// Brute-force centered difference of h, the independent check for the
// hand-derived closed-form group velocity.
double group_fd(const FractionalOrder& order, double xi, double step = 1e-5) {
  return (dispersion_symbol(order, xi + step) -
          dispersion_symbol(order, xi - step)) /
         (2.0 * step);
}

}  // namespace

TEST_CASE("nonlocality coefficient values") {
  CHECK(nonlocality_coefficient(2.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(nonlocality_coefficient(2.0) - 1.0) <= 1e-15);
  CHECK(std::abs(nonlocality_coefficient(1.5) - 0.7071067811865476) < 1e-15);
  CHECK(std::abs(nonlocality_coefficient(2.5) - 0.7071067811865476) < 1e-15);
}

TEST_CASE("nonlocality coefficient domain is the open interval (1,3)") {
  CHECK_THROWS_AS(nonlocality_coefficient(1.0), std::domain_error);
  CHECK_THROWS_AS(nonlocality_coefficient(3.0), std::domain_error);
  CHECK_THROWS_AS(nonlocality_coefficient(0.5), std::domain_error);
  CHECK_THROWS_AS(nonlocality_coefficient(3.2), std::domain_error);
  CHECK_THROWS_AS(nonlocality_coefficient(std::nan("")), std::domain_error);
  CHECK_THROWS_AS(FractionalOrder(1.0), std::domain_error);
}

TEST_CASE("coefficient is strictly positive across the admissible range") {
  for (int i = 1; i < 2000; ++i) {
    const double alpha = 1.0 + 2.0 * i / 2000.0;
    CHECK(nonlocality_coefficient(alpha) > 0.0);
  }
}

TEST_CASE("dispersion symbol pointwise values") {
  const FractionalOrder order(2.0);
  CHECK(dispersion_symbol(order, 0.0) == 0.0);
  CHECK(std::abs(dispersion_symbol(order, 1.0) - 0.7071067811865476) < 1e-15);
  CHECK(std::abs(dispersion_symbol(order, 1e6) - 1.0) < 1e-9);
}

TEST_CASE("symbol parities") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.01, 60.0);
  for (double alpha : {1.5, 2.0, 2.5}) {
    const FractionalOrder order(alpha);
    for (int i = 0; i < 200; ++i) {
      const double xi = dist(rng);
      CHECK(dispersion_symbol(order, xi) ==
            doctest::Approx(dispersion_symbol(order, -xi)).epsilon(1e-15));
      const AuxiliarySymbols plus = auxiliary_symbols(order, xi, 0.3);
      const AuxiliarySymbols minus = auxiliary_symbols(order, -xi, 0.3);
      CHECK(plus.p == doctest::Approx(minus.p).epsilon(1e-15));
      CHECK(plus.d_frac == doctest::Approx(minus.d_frac).epsilon(1e-15));
      CHECK(std::abs(plus.g + minus.g) < 1e-15 * std::abs(plus.g));
      CHECK(plus.g.real() == 0.0);
    }
  }
}

TEST_CASE("characteristic identity p(xi, h(xi)) = 0") {
  for (double alpha : {1.2, 1.5, 2.0, 2.5, 2.9}) {
    const FractionalOrder order(alpha);
    for (double xi = -50.0; xi <= 50.0; xi += 0.7) {
      const double h = dispersion_symbol(order, xi);
      CHECK(std::abs(auxiliary_symbols(order, xi, h).p) <= 1e-15 * (1.0 + h * h));
    }
  }
}

TEST_CASE("auxiliary symbols pointwise values") {
  const FractionalOrder order(2.0);
  CHECK(auxiliary_symbols(order, 1.0, 0.0).p == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(auxiliary_symbols(order, 3.0, 0.0).d_frac ==
        doctest::Approx(-9.0).epsilon(1e-15));
  CHECK(auxiliary_symbols(order, 0.0, 0.0).g == std::complex<double>{0.0, 0.0});
}

TEST_CASE("g h = i xi and d_frac = -a |xi|^alpha") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(1e-3, 80.0);
  for (double alpha : {1.5, 2.0, 2.5}) {
    const FractionalOrder order(alpha);
    for (int i = 0; i < 300; ++i) {
      const double xi = (i % 2 == 0 ? 1.0 : -1.0) * dist(rng);
      const AuxiliarySymbols aux = auxiliary_symbols(order, xi, 0.0);
      const std::complex<double> lhs =
          aux.g * dispersion_symbol(order, xi);
      const std::complex<double> rhs{0.0, xi};
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
      const double minus_a = -order.coefficient() *
                             std::pow(std::abs(xi), order.alpha());
      CHECK(std::abs(aux.d_frac - minus_a) <= 1e-15 * std::abs(minus_a));
    }
  }
}

TEST_CASE("velocities at reference points") {
  const FractionalOrder order(2.0);
  const Velocities at_zero = velocities(order, 0.0);
  CHECK(at_zero.phase == 1.0);
  CHECK(at_zero.group == 1.0);
  const Velocities at_one = velocities(order, 1.0);
  CHECK(at_one.phase == doctest::Approx(0.70710678).epsilon(1e-8));
  CHECK(at_one.group == doctest::Approx(0.35355339).epsilon(1e-8));
}

TEST_CASE("group velocity goes negative for alpha > 2 at large frequency") {
  const FractionalOrder order(2.5);
  CHECK(velocities(order, 10.0).group < 0.0);
  // and the brute-force derivative agrees about the sign
  CHECK(group_fd(order, 10.0) < 0.0);
}

TEST_CASE("closed-form group velocity matches finite differences") {
  // The derivative of h with respect to signed xi is odd, so compare
  // against sgn(xi) * group away from the kink at xi = 0.
  for (double alpha : {1.5, 2.0, 2.5}) {
    const FractionalOrder order(alpha);
    for (double xi = -50.0; xi <= 50.0; xi += 0.25) {
      if (std::abs(xi) < 0.05) continue;
      const double sign = xi > 0.0 ? 1.0 : -1.0;
      CHECK(std::abs(sign * velocities(order, xi).group - group_fd(order, xi)) <=
            1e-6);
    }
    // one-sided at the origin: h(xi) ~ |xi| so the slope from the right is 1
    const double one_sided = dispersion_symbol(order, 1e-7) / 1e-7;
    CHECK(std::abs(one_sided - velocities(order, 0.0).group) < 1e-6);
  }
}

TEST_CASE("phase velocity stays in (0, 1]") {
  for (double alpha : {1.2, 1.9, 2.6}) {
    const FractionalOrder order(alpha);
    for (double xi = -80.0; xi <= 80.0; xi += 0.5) {
      const double phase = velocities(order, xi).phase;
      CHECK(phase > 0.0);
      CHECK(phase <= 1.0);
    }
  }
}

TEST_CASE("nondimensionalize") {
  SUBCASE("identity scales") {
    const PhysicalParams params(1.0, 1.0, 1.0);
    const Dimensionless d = nondimensionalize(params, 2.0, 3.0, 4.0, 5.0);
    CHECK(d.x == 2.0);
    CHECK(d.t == 3.0);
    CHECK(d.u == 4.0);
    CHECK(d.sigma == 5.0);
  }
  SUBCASE("worked example") {
    const PhysicalParams params(2.0, 4.0, 1.0);
    const Dimensionless d = nondimensionalize(params, 2.0, 1.0, 2.0, 8.0);
    CHECK(d.x == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.t == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.u == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.sigma == doctest::Approx(2.0).epsilon(1e-15));
  }
  SUBCASE("time scaling with density") {
    const PhysicalParams params(1.0, 1.0, 4.0);
    CHECK(nondimensionalize(params, 0.0, 2.0, 0.0, 0.0).t ==
          doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("rejects nonpositive parameters") {
    CHECK_THROWS_AS(PhysicalParams(0.0, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(PhysicalParams(1.0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(PhysicalParams(1.0, 1.0, 0.0), std::domain_error);
  }
}

TEST_CASE("dispersion curve invariants") {
  const FractionalOrder order(1.5);
  std::vector<double> xi;
  for (double v = -50.0; v <= 50.0; v += 0.5) xi.push_back(v);
  const DispersionCurve curve = sample_dispersion(order, xi);
  REQUIRE(curve.omega.size() == xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) {
    CHECK(curve.omega[k] >= 0.0);
    CHECK(curve.phase_velocity[k] > 0.0);
    CHECK(curve.phase_velocity[k] <= 1.0);
    if (std::abs(xi[k]) >= 0.5) {
      const double sign = xi[k] > 0.0 ? 1.0 : -1.0;
      CHECK(std::abs(sign * curve.group_velocity[k] - group_fd(order, xi[k])) <=
            1e-6);
    }
  }
  // value 1 is stored at xi = 0 as the limit
  const DispersionCurve at_zero = sample_dispersion(order, {0.0});
  CHECK(at_zero.phase_velocity[0] == 1.0);
  CHECK(at_zero.group_velocity[0] == 1.0);
}
