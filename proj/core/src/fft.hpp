#pragma once

#include <complex>
#include <vector>

namespace fracwave::detail {

// Centered-grid transform pair matching the continuum convention used for
// every spectrum in this library:
//   forward:  u_hat(xi_k) = dx * sum_i u(x_i) exp(-i xi_k x_i)
//   inverse:  u(x_i) = dxi/(2 pi) * sum_k u_hat(xi_k) exp(+i xi_k x_i)
// with x_i = -L + i dx and xi_k = (k - n/2) dxi, dxi = pi/L. Both reduce to
// a standard FFT after alternating-sign twiddles because dxi*L = pi. Plans
// are cached per size and executed on per-call buffers, so concurrent calls
// are safe.
std::vector<std::complex<double>> forward_dft(
    const std::vector<std::complex<double>>& u, double dx);

std::vector<std::complex<double>> inverse_dft(
    const std::vector<std::complex<double>>& u_hat, double dxi);

}  // namespace fracwave::detail
