#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "run_config.hpp"

namespace {

// The config file (if any) is applied before flag parsing so explicit flags
// always win over file values.
std::string find_config_path(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" || arg == "-c") return argv[i + 1];
  }
  return {};
}

void add_options(CLI::App* cmd, fracwave::cli::RunConfig& config,
                 std::string& config_sink) {
  cmd->fallthrough();
  cmd->add_option("--config,-c", config_sink,
                  "JSON config file; flags override its values");
  cmd->add_option("--alpha", config.alpha, "fractional order, open interval (1,3)");
  cmd->add_option("--a", config.a, "gaussian regularization width of u0");
  cmd->add_option("--v0-a", config.v0_a, "v0 gaussian width; 0 selects v0 = 0");
  cmd->add_option("--method", config.method, "spectral|quadrature|both");
  cmd->add_option("--half-width", config.half_width, "grid half width L");
  cmd->add_option("--n", config.n, "grid points, power of two >= 8");
  cmd->add_option("--times", config.times, "output times, comma separated")
      ->delimiter(',');
  cmd->add_option("--x-min", config.x_min, "output range lower end");
  cmd->add_option("--x-max", config.x_max, "output range upper end");
  cmd->add_option("--x-count", config.x_count, "output sample count");
  cmd->add_option("--s", config.s, "Sobolev index for regularity");
  cmd->add_option("--tolerance", config.tolerance, "validate sup-norm tolerance");
  cmd->add_option("--abs-tol", config.abs_tol, "quadrature absolute tolerance");
  cmd->add_option("--window-width", config.window_width, "wavefront probe window");
  cmd->add_option("--a-seq", config.a_seq, "wavefront regularization sequence")
      ->delimiter(',');
  cmd->add_option("--x0-list", config.x0_list, "wavefront probe locations")
      ->delimiter(',');
  cmd->add_option("--t", config.probe_time, "wavefront probe time");
  cmd->add_option("--xi-max", config.xi_max, "dispersion frequency range");
  cmd->add_option("--xi-count", config.xi_count, "dispersion sample count");
  cmd->add_option("--out,-o", config.out_dir, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  fracwave::cli::RunConfig config;
  std::string config_sink;

  try {
    const std::string config_path = find_config_path(argc, argv);
    if (!config_path.empty()) {
      config = fracwave::cli::load_config_file(config_path, config);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }

  CLI::App app{"fracwave: nonlocal fractional wave equation simulator"};
  app.require_subcommand(0, 1);
  add_options(&app, config, config_sink);
  for (const char* name : {"simulate", "dispersion", "regularity", "wavefront",
                           "validate", "figures"}) {
    add_options(app.add_subcommand(name), config, config_sink);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  const auto subcommands = app.get_subcommands();
  if (!subcommands.empty()) {
    config.command = subcommands.front()->get_name();
  } else if (config.command.empty()) {
    std::cerr << "error: no command given (and none set in the config file)\n"
              << app.help();
    return 1;
  }

  try {
    return fracwave::cli::run(config, fracwave::cli::verbosity_from_env());
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
}
