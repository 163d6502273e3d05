#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "fracwave/field.hpp"
#include "fracwave/multiplier.hpp"
#include "fracwave/propagator.hpp"

namespace fracwave {

/// Forward transform of real grid samples under the continuum convention
/// u_hat(xi_k) = dx * sum_i u(x_i) exp(-i xi_k x_i).
std::vector<std::complex<double>> forward_spectrum(
    const SpatialGrid& grid, const std::vector<double>& samples);

/// Inverse transform back to grid samples, u(x_i) = dxi/(2 pi) * sum_k
/// u_hat(xi_k) exp(+i xi_k x_i). The imaginary parts are discarded; their
/// largest magnitude is reported through max_imag when non-null.
std::vector<double> inverse_samples(
    const SpatialGrid& grid, const std::vector<std::complex<double>>& spectrum,
    double* max_imag = nullptr);

/// Evaluates the same inverse-transform sum at arbitrary locations (not
/// restricted to grid points). The unpaired -Nyquist bin is treated as a
/// pure cosine mode so real fields stay real off-grid.
std::vector<double> inverse_at(const SpatialGrid& grid,
                               const std::vector<std::complex<double>>& spectrum,
                               const std::vector<double>& xs,
                               double* max_imag = nullptr);

/// Samples the initial data on the grid's frequency axis. Gaussian and
/// point-mass spectra are set analytically (exp(-a^2 xi^2/4) and 1); sample
/// arrays go through the discrete forward transform. A Gaussian too narrow
/// for the grid (spectrum above 1e-8 at Nyquist) appends an aliasing
/// warning; it is reported, not fatal.
SpectralState sample_initial(const InitialData& data, const SpatialGrid& grid,
                             const FractionalOrder& order,
                             std::vector<std::string>* warnings = nullptr);

/// Full pipeline on grid points: sample, evolve exactly to each requested
/// time, inverse-transform. Requires all times >= 0 and rejects point-mass
/// data at exactly t = 0 (the output there is distributional, not a
/// function). Imaginary residues beyond 1e-9 of the field maximum abort.
WaveField solve_at_times(const InitialData& data, const SpatialGrid& grid,
                         const FractionalOrder& order,
                         const std::vector<double>& times);

/// Same pipeline evaluated at arbitrary output locations via direct
/// inverse-transform sums (no interpolation).
WaveField solve_at_points(const InitialData& data, const SpatialGrid& grid,
                          const FractionalOrder& order,
                          const std::vector<double>& times,
                          const std::vector<double>& xs);

/// Fourier multipliers applied pointwise to spectra.
///   A:     h(xi)                      (half-wave factor of the operator)
///   B:     i sgn(xi) sqrt(1+a|xi|^a)  (so that B after A equals d/dx)
///   Dfrac: |xi|^alpha cos(alpha*pi/2) (fractional-derivative symbol)
///   Dx:    i xi                       (first derivative)
/// Odd symbols (B, Dx) zero the unpaired -Nyquist bin: it has no conjugate
/// partner, and dropping it keeps real fields real.
enum class Multiplier { A, B, Dfrac, Dx };

std::vector<std::complex<double>> apply_multiplier(
    const std::vector<double>& xi, std::vector<std::complex<double>> spectrum,
    Multiplier which, const FractionalOrder& order);

/// Applies the multiplier to both components of a state (the operators are
/// time-independent, so they commute with d/dt).
SpectralState apply_multiplier(SpectralState state, Multiplier which);

/// Real-space form: forward transform, multiply, inverse transform.
std::vector<double> apply_multiplier(const SpatialGrid& grid,
                                     const std::vector<double>& samples,
                                     Multiplier which,
                                     const FractionalOrder& order);

/// Strain and stress recovered from the displacement spectrum at one time:
/// eps_hat = i xi u_hat and sigma_hat = eps_hat / (1 + a|xi|^alpha),
/// both inverse-transformed to grid samples. Returns (sigma, epsilon).
std::pair<std::vector<double>, std::vector<double>> stress_strain(
    const SpectralState& state, const SpatialGrid& grid);

}  // namespace fracwave
