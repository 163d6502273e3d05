#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracwave/field.hpp"
#include "fracwave/multiplier.hpp"

namespace fracwave {

/// Controls for the direct oscillatory-integral evaluation. The integrand's
/// phase rate is bounded by |x| + t (the group speed never exceeds 1), so
/// panels are capped at points_per_period samples per period of the fastest
/// oscillation before any adaptive subdivision.
struct QuadratureSpec {
  double abs_tol = 1e-9;       ///< target absolute error per evaluated point
  double xi_max = 0.0;         ///< truncation point; 0 derives it from abs_tol
  int max_panels = 200000;     ///< cap on evaluated panels per point
  int points_per_period = 8;   ///< panel width cap: 2*pi/(ppp*(|x|+t))
};

/// Raised when max_panels is exhausted; carries the best value reached and
/// the error bound actually achieved.
class QuadratureLimitError : public std::runtime_error {
 public:
  QuadratureLimitError(const std::string& message, double best,
                       double achieved_bound)
      : std::runtime_error(message),
        best_estimate(best),
        error_bound(achieved_bound) {}

  double best_estimate;
  double error_bound;
};

/// Smallest Xi with (2/(pi a^2 Xi)) exp(-a^2 Xi^2/4) <= eps, found by
/// bisection; that expression bounds the discarded tail of the solution
/// integral. Rejects a <= 0 (the integral is not absolutely convergent for
/// an unregularized point mass) and eps <= 0.
double truncation_bound(double a, double eps);

struct PointResult {
  double value;
  double error_bound;  ///< panel estimates plus truncation tail
  int panels;          ///< panels evaluated
};

/// u_a(x,t) by adaptive quadrature of
///   (1/2pi) Int_0^Xi [cos(xi(x + t/sqrt(1+a_c xi^alpha)))
///                   + cos(xi(x - t/sqrt(1+a_c xi^alpha)))] exp(-a^2 xi^2/4) dxi
/// for Gaussian-regularized point-mass displacement data and zero initial
/// velocity (the only case this closed form covers). The two cosines are
/// summed inside one integrand so evenness in x is preserved exactly.
/// Subdivision continues until the panel-estimate sum and the truncation
/// tail are each below abs_tol.
PointResult evaluate_point_checked(const FractionalOrder& order, double a,
                                   double x, double t,
                                   const QuadratureSpec& spec = {});

double evaluate_point(const FractionalOrder& order, double a, double x,
                      double t, const QuadratureSpec& spec = {});

struct ProfileResult {
  WaveField field;
  std::vector<double> error_bounds;  ///< aligned with field.values

  struct Failure {
    std::size_t ix;
    std::size_t it;
    std::string message;
    double best_estimate;
    double error_bound;
  };
  std::vector<Failure> failures;  ///< per-point limit errors; field keeps the
                                  ///< best estimates for those entries
};

ProfileResult evaluate_profile(const FractionalOrder& order, double a,
                               const std::vector<double>& xs,
                               const std::vector<double>& ts,
                               const QuadratureSpec& spec = {});

/// Fixed composite evaluation of the same integrand over [xi_lo, xi_hi] on
/// `panels` equal panels of the embedded pair's fine rule, with no
/// adaptivity and no width cap. Used for convergence-order studies; note
/// the integrand has a |xi|^alpha kink at xi = 0, so clean rate
/// measurements start the range above zero.
double integrate_uniform(const FractionalOrder& order, double a, double x,
                         double t, double xi_lo, double xi_hi, int panels);

}  // namespace fracwave
