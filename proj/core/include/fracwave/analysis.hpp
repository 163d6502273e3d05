#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fracwave/field.hpp"
#include "fracwave/multiplier.hpp"
#include "fracwave/propagator.hpp"

namespace fracwave {

/// Discrete H^s norm (sum_k (1+xi_k^2)^s |u_hat_k|^2 dxi/(2 pi))^{1/2}.
/// At s = 0 this is Parseval-exact against the spatial l2 sum.
double sobolev_norm(const std::vector<double>& xi,
                    const std::vector<std::complex<double>>& spectrum,
                    double s);
double sobolev_norm(const SpectralState& state, double s);

struct ReportRow {
  double t;
  double value;
  double reference;
};

/// Generic verification record: a tagged sup residual with the per-time
/// rows behind it and free-form notes (violations, skips).
struct ResidualReport {
  std::string tag;
  double sup_residual = 0.0;
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;
};

/// Checks ||u(t)||_{H^s} <= ||u0||_{H^s} + t ||v0||_{H^s} + 1e-9 at every
/// sampled time (per mode |e0| <= 1 and |e1| <= t). Rows carry (t, norm,
/// bound); violations are listed in the notes with their ratios, and the
/// sup over t of the norm is reported for continuity inspection.
ResidualReport regularity_check(const InitialData& data,
                                const SpatialGrid& grid,
                                const FractionalOrder& order, double s,
                                const std::vector<double>& times);

/// Per-mode conservation of h^2|u_hat|^2 + |du_hat/dt|^2: reports the sup
/// over modes and times of the residual normalized by the t = 0 value.
/// The identity is exact trigonometry, so the sup sits at rounding level.
ResidualReport mode_energy_residual(const SpectralState& state0,
                                    const std::vector<double>& times);

/// The three operator-level identities behind the factorization of the wave
/// operator P = (D_t + A)(-D_t + A) with A the h-multiplier:
///   half_wave:     (-D_t + A) annihilates exp(i t h) u0_hat; D_t is
///                  approximated by centered differences, so the sup
///                  residual shrinks at second order in the time step.
///   factorization: spectra of (D_t + A)((-D_t + A)u) and of Pu agree per
///                  mode when time derivatives are taken exactly from the
///                  mode ODE; this pins h*h against xi^2/(1+a|xi|^alpha).
///   half_wave_identity: (D_t + A)u = A(exp(i t h) u0_hat) for v0 = 0 data
///                  (skipped with a note otherwise).
struct OperatorResiduals {
  ResidualReport half_wave;
  ResidualReport factorization;
  ResidualReport half_wave_identity;
};

/// Requires at least three strictly positive, uniformly spaced times.
OperatorResiduals operator_residuals(const InitialData& data,
                                     const SpatialGrid& grid,
                                     const FractionalOrder& order,
                                     const std::vector<double>& times);

/// Truncated Gaussian window exp(-((x-x0)/width)^2), cut at cut_factor
/// widths where its value is below 1e-15.
struct WindowSpec {
  double width = 1.0;
  double cut_factor = 6.0;
};

struct DecayBand {
  double xi_low;
  double xi_high;
  double sup_mag;
  bool included;  ///< above the 1e-13 magnitude floor, used in the fit
};

/// Windowed-spectrum decay summary at one location. fitted_exponent is the
/// least-squares slope of log band sup against log band center over dyadic
/// bands from |xi| = 1 up to Nyquist/4; fit_quality is the R^2 of that
/// regression. Exponents with fit_quality < 0.5 (or fewer than two usable
/// bands) are marked unreliable.
struct DecayProfile {
  double alpha = 0.0;
  double x0 = 0.0;
  double window_width = 0.0;
  double time = 0.0;
  std::vector<DecayBand> bands;
  int bands_used = 0;
  double fitted_exponent = 0.0;
  double fit_quality = 0.0;
  bool reliable = false;
  /// The localization prediction behind this probe is established for
  /// alpha >= 2 only; below that the probe still runs but is exploratory.
  bool theory_backed = false;
};

/// Probes local frequency content of a sampled field around x0.
DecayProfile decay_probe(const std::vector<double>& field_samples,
                         const SpatialGrid& grid, const FractionalOrder& order,
                         double x0, double time, const WindowSpec& window);

/// Convenience: solves for Gaussian-regularized point-mass data (width a,
/// zero velocity) at time t, then probes at x0.
DecayProfile decay_probe_gaussian(const FractionalOrder& order, double a,
                                  double x0, double t, const WindowSpec& window,
                                  const SpatialGrid& grid);

/// Matrix of decay probes over a regularization sequence and a list of probe
/// locations, with one verdict line per localization prediction:
/// the exponent at x0 = 0 must be non-decreasing as a decreases, and the
/// exponents at |x0| >= 2 must be stable (spread < 1) across the sequence.
struct SingularityMap {
  std::vector<double> a_values;
  std::vector<double> x0_values;
  std::vector<std::vector<DecayProfile>> profiles;  ///< [a index][x0 index]
  std::vector<std::string> verdicts;
};

SingularityMap singularity_map(const FractionalOrder& order, double t,
                               const std::vector<double>& a_values,
                               const std::vector<double>& x0_values,
                               const WindowSpec& window,
                               const SpatialGrid& grid);

}  // namespace fracwave
