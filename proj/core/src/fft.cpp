#include "fft.hpp"

#include <fftw3.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <numbers>
#include <vector>

namespace fracwave::detail {

namespace {

fftw_complex* raw(std::complex<double>* p) {
  return reinterpret_cast<fftw_complex*>(p);
}

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// FFTW planning is not thread-safe; executing a cached plan on fresh arrays
// is. Plans are created unaligned so they accept any heap buffer.
PlanPair plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair>* cache =
      new std::map<std::size_t, PlanPair>();

  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache->find(n);
  if (it != cache->end()) return it->second;

  std::vector<std::complex<double>> a(n), b(n);
  PlanPair pair;
  pair.forward =
      fftw_plan_dft_1d(static_cast<int>(n), raw(a.data()), raw(b.data()),
                       FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  pair.backward =
      fftw_plan_dft_1d(static_cast<int>(n), raw(a.data()), raw(b.data()),
                       FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  (*cache)[n] = pair;
  return pair;
}

}  // namespace

std::vector<std::complex<double>> forward_dft(
    const std::vector<std::complex<double>>& u, double dx) {
  const std::size_t n = u.size();
  if (n == 0) return {};

  // u_i (-1)^i, FFT, then dx (-1)^k. The alternating signs re-center both
  // grids; n/2 is even for every admissible grid so the phase is exact.
  std::vector<std::complex<double>> work(n), out(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i] = (i & 1u) ? -u[i] : u[i];
  }
  fftw_execute_dft(plans_for(n).forward, raw(work.data()), raw(out.data()));
  for (std::size_t k = 0; k < n; ++k) {
    out[k] *= (k & 1u) ? -dx : dx;
  }
  return out;
}

std::vector<std::complex<double>> inverse_dft(
    const std::vector<std::complex<double>>& u_hat, double dxi) {
  const std::size_t n = u_hat.size();
  if (n == 0) return {};

  const double scale = dxi / (2.0 * std::numbers::pi);
  std::vector<std::complex<double>> work(n), out(n);
  for (std::size_t k = 0; k < n; ++k) {
    work[k] = (k & 1u) ? -u_hat[k] : u_hat[k];
  }
  fftw_execute_dft(plans_for(n).backward, raw(work.data()), raw(out.data()));
  for (std::size_t i = 0; i < n; ++i) {
    out[i] *= (i & 1u) ? -scale : scale;
  }
  return out;
}

}  // namespace fracwave::detail
