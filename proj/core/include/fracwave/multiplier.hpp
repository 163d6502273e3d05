#pragma once

#include <complex>
#include <vector>

namespace fracwave {

/// Order of the space-fractional derivative in the nonlocal stress law,
/// restricted to the open interval (1,3). On that interval the nonlocality
/// coefficient a = -cos(alpha*pi/2) is strictly positive, which keeps the
/// dispersion symbol real and bounded by 1 in phase velocity. The endpoints
/// are rejected: a vanishes there and the operator changes class.
class FractionalOrder {
 public:
  explicit FractionalOrder(double alpha);

  double alpha() const noexcept { return alpha_; }
  /// Nonlocality coefficient a = -cos(alpha*pi/2), strictly positive.
  double coefficient() const noexcept { return a_alpha_; }

 private:
  double alpha_;
  double a_alpha_;
};

/// -cos(alpha*pi/2); throws std::domain_error unless 1 < alpha < 3.
double nonlocality_coefficient(double alpha);

/// Mode frequency h(xi) = |xi| / sqrt(1 + a|xi|^alpha).
/// Even in xi, nonnegative, h(0) = 0, and h(xi)/|xi| <= 1 everywhere.
double dispersion_symbol(const FractionalOrder& order, double xi);

/// Pointwise values of the remaining multiplier symbols at (xi, tau).
struct AuxiliarySymbols {
  /// Full space-time symbol p = -tau^2 + h(xi)^2; vanishes on tau = ±h(xi).
  double p;
  /// g = i*sgn(xi)*sqrt(1 + a|xi|^alpha), pure imaginary and odd in xi.
  /// Satisfies g(xi)*h(xi) = i*xi. Convention sgn(0) = 0, so g(0) = 0.
  std::complex<double> g;
  /// Symbol of the fractional derivative: |xi|^alpha * cos(alpha*pi/2),
  /// identically equal to -a|xi|^alpha.
  double d_frac;
};

AuxiliarySymbols auxiliary_symbols(const FractionalOrder& order, double xi,
                                   double tau);

struct Velocities {
  double phase;
  double group;
};

/// Phase velocity h(xi)/|xi| and group velocity dh/d|xi| in closed form:
///   group = (1 + a(1 - alpha/2)|xi|^alpha) * (1 + a|xi|^alpha)^{-3/2}.
/// Both are even in xi and tend to 1 as xi -> 0; the group velocity turns
/// negative for large |xi| when alpha > 2.
Velocities velocities(const FractionalOrder& order, double xi);

/// Material constants of the dimensional problem, all strictly positive.
struct PhysicalParams {
  PhysicalParams(double ell, double modulus, double density);

  double ell;      ///< nonlocality length scale
  double modulus;  ///< elastic modulus
  double density;  ///< mass density
};

struct Dimensionless {
  double x;
  double t;
  double u;
  double sigma;
};

/// Maps dimensional (x, t, u, sigma) to the dimensionless variables used by
/// every other operation: (x/ell, (t/ell)*sqrt(E/rho), u/ell, sigma/E).
Dimensionless nondimensionalize(const PhysicalParams& params, double x,
                                double t, double u, double sigma);

/// Sampled dispersion relation omega = h(xi) with phase and group velocities.
struct DispersionCurve {
  std::vector<double> xi;
  std::vector<double> omega;
  std::vector<double> phase_velocity;
  std::vector<double> group_velocity;
};

DispersionCurve sample_dispersion(const FractionalOrder& order,
                                  const std::vector<double>& xi);

}  // namespace fracwave
