#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace fracwave::cli {

/// Fully-resolved run description. Defaults here are the documented ones;
/// a JSON config file overrides them and command-line flags override the
/// file. The resolved result is echoed into the output directory as
/// resolved.json, from which any run can be reproduced byte-identically.
struct RunConfig {
  std::string command;  ///< simulate|dispersion|regularity|wavefront|validate|figures

  double alpha = 2.0;
  double a = 0.1;                  ///< gaussian regularization width of u0
  double v0_a = 0.0;               ///< v0 gaussian width; 0 means v0 = 0
  std::string method = "spectral"; ///< spectral|quadrature|both

  double half_width = 200.0;
  std::size_t n = 16384;

  std::vector<double> times = {1, 5, 10, 15, 20, 25};
  double x_min = -10.0;
  double x_max = 40.0;
  std::size_t x_count = 2001;

  double s = 0.0;            ///< Sobolev index for `regularity`
  double tolerance = 1e-6;   ///< sup-norm criterion for `validate`
  double abs_tol = 1e-9;     ///< quadrature target error

  double window_width = 1.0;                   ///< `wavefront` probe window
  std::vector<double> a_seq = {0.1, 0.05, 0.02};
  std::vector<double> x0_list = {0, 1, 2, 3};
  double probe_time = 5.0;

  double xi_max = 50.0;      ///< `dispersion` frequency range
  std::size_t xi_count = 1001;

  std::string out_dir = "out";
};

/// Reads a JSON config over `base`. Unknown keys are rejected by name.
RunConfig load_config_file(const std::string& path, RunConfig base);

/// Checks every field against the preconditions of the modules the command
/// will call; throws std::invalid_argument naming the offending key.
void validate_config(const RunConfig& config);

void write_resolved(const RunConfig& config, const std::string& path);

/// FRACWAVE_VERBOSE: 0 quiet, 1 normal (default), 2 chatty.
int verbosity_from_env();

/// Executes the command; returns the process exit status.
int run(const RunConfig& config, int verbosity);

}  // namespace fracwave::cli
