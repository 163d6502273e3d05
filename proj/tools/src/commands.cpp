#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "fracwave/analysis.hpp"
#include "fracwave/io.hpp"
#include "fracwave/multiplier.hpp"
#include "fracwave/quadrature_solver.hpp"
#include "fracwave/spectral_solver.hpp"
#include "fracwave/svg.hpp"
#include "run_config.hpp"

namespace fracwave::cli {

namespace {

namespace fs = std::filesystem;

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) /
                      static_cast<double>(count - 1);
  }
  return out;
}

InitialData data_from(const RunConfig& config) {
  InitialData data;
  data.u0 = DataComponent::gaussian(config.a);
  data.v0 = config.v0_a > 0.0 ? DataComponent::gaussian(config.v0_a)
                              : DataComponent::zero();
  return data;
}

void print_warnings(const WaveField& field, int verbosity) {
  if (verbosity < 1) return;
  for (const std::string& warning : field.meta.warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
}

struct Manifest {
  std::string command;
  std::vector<std::string> artifacts;
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> failures;

  void write(const fs::path& dir) const {
    nlohmann::json j;
    j["command"] = command;
    j["artifacts"] = artifacts;
    j["result"] = result;
    j["failures"] = failures;
    j["status"] = failures.empty() ? "ok" : "partial";
    std::ofstream out(dir / "manifest.json", std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " +
                               (dir / "manifest.json").string());
    }
    out << j.dump(2) << '\n';
  }
};

int cmd_simulate(const RunConfig& config, const fs::path& dir, int verbosity,
                 Manifest& manifest) {
  const SpatialGrid grid(config.half_width, config.n);
  const FractionalOrder order(config.alpha);
  const std::vector<double> xs = linspace(config.x_min, config.x_max, config.x_count);

  if (config.method == "spectral" || config.method == "both") {
    WaveField field =
        solve_at_points(data_from(config), grid, order, config.times, xs);
    field.meta.tolerance = config.tolerance;
    print_warnings(field, verbosity);
    write_wave_field_csv(field, (dir / "spectral.csv").string());
    write_field_sidecar(field, (dir / "spectral.json").string());
    manifest.artifacts.push_back("spectral.csv");
    manifest.artifacts.push_back("spectral.json");
  }
  if (config.method == "quadrature" || config.method == "both") {
    if (config.v0_a > 0.0) {
      throw std::invalid_argument(
          "config key 'method': the quadrature pipeline covers v0 = 0 only; "
          "set v0_a = 0 or use method=spectral");
    }
    QuadratureSpec spec;
    spec.abs_tol = config.abs_tol;
    const ProfileResult result =
        evaluate_profile(order, config.a, xs, config.times, spec);
    write_wave_field_csv(result.field, (dir / "quadrature.csv").string());
    write_field_sidecar(result.field, (dir / "quadrature.json").string());
    write_error_bounds_csv(result, (dir / "quadrature_error_bounds.csv").string());
    manifest.artifacts.push_back("quadrature.csv");
    manifest.artifacts.push_back("quadrature.json");
    manifest.artifacts.push_back("quadrature_error_bounds.csv");
    for (const auto& failure : result.failures) {
      manifest.failures.push_back(failure.message);
    }
  }
  if (verbosity >= 1) {
    std::cout << "simulate: wrote " << manifest.artifacts.size()
              << " artifacts to " << dir.string() << '\n';
  }
  return manifest.failures.empty() ? 0 : 1;
}

int cmd_validate(const RunConfig& config, const fs::path& dir, int verbosity,
                 Manifest& manifest) {
  const SpatialGrid grid(config.half_width, config.n);
  const FractionalOrder order(config.alpha);
  const std::vector<double> xs = linspace(config.x_min, config.x_max, config.x_count);

  InitialData data;
  data.u0 = DataComponent::gaussian(config.a);
  data.v0 = DataComponent::zero();  // the quadrature formula covers v0 = 0
  const WaveField spectral = solve_at_points(data, grid, order, config.times, xs);
  print_warnings(spectral, verbosity);

  QuadratureSpec spec;
  spec.abs_tol = config.abs_tol;
  const ProfileResult quad =
      evaluate_profile(order, config.a, xs, config.times, spec);
  for (const auto& failure : quad.failures) {
    manifest.failures.push_back(failure.message);
  }

  std::ofstream out(dir / "difference.csv", std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " +
                             (dir / "difference.csv").string());
  }
  out << "x,t,u_spectral,u_quadrature,abs_diff\n";
  double max_diff = 0.0;
  for (std::size_t j = 0; j < config.times.size(); ++j) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double us = spectral.value(i, j);
      const double uq = quad.field.value(i, j);
      const double diff = std::abs(us - uq);
      max_diff = std::max(max_diff, diff);
      out << format_double(xs[i]) << ',' << format_double(config.times[j])
          << ',' << format_double(us) << ',' << format_double(uq) << ','
          << format_double(diff) << '\n';
    }
  }
  out.flush();
  if (!out) throw std::runtime_error("write failed: difference.csv");
  manifest.artifacts.push_back("difference.csv");

  const bool pass = max_diff <= config.tolerance && manifest.failures.empty();
  manifest.result["max_abs_diff"] = max_diff;
  manifest.result["tolerance"] = config.tolerance;
  manifest.result["pass"] = pass;
  if (verbosity >= 1) {
    std::cout << "validate: max |u_spectral - u_quadrature| = "
              << format_double(max_diff) << " (tolerance "
              << format_double(config.tolerance) << "): "
              << (pass ? "PASS" : "FAIL") << '\n';
  }
  return pass ? 0 : 1;
}

int cmd_dispersion(const RunConfig& config, const fs::path& dir, int verbosity,
                   Manifest& manifest) {
  const FractionalOrder order(config.alpha);
  const std::size_t count =
      (config.xi_count % 2 == 0) ? config.xi_count + 1 : config.xi_count;
  const DispersionCurve curve =
      sample_dispersion(order, linspace(-config.xi_max, config.xi_max, count));
  write_dispersion_csv(curve, (dir / "dispersion.csv").string());
  manifest.artifacts.push_back("dispersion.csv");
  if (verbosity >= 1) {
    std::cout << "dispersion: wrote " << count << " samples for alpha = "
              << format_double(config.alpha) << '\n';
  }
  return 0;
}

int cmd_regularity(const RunConfig& config, const fs::path& dir, int verbosity,
                   Manifest& manifest) {
  const SpatialGrid grid(config.half_width, config.n);
  const FractionalOrder order(config.alpha);
  const ResidualReport report =
      regularity_check(data_from(config), grid, order, config.s, config.times);
  write_report_csv(report, (dir / "regularity.csv").string());
  write_report_sidecar(report, (dir / "regularity.json").string());
  manifest.artifacts.push_back("regularity.csv");
  manifest.artifacts.push_back("regularity.json");
  manifest.result["sup_residual"] = report.sup_residual;
  if (verbosity >= 1) {
    std::cout << "regularity: sup (norm - bound) = "
              << format_double(report.sup_residual) << " at s = "
              << format_double(config.s) << '\n';
    for (const std::string& note : report.notes) {
      std::cout << "  " << note << '\n';
    }
  }
  return 0;
}

int cmd_wavefront(const RunConfig& config, const fs::path& dir, int verbosity,
                  Manifest& manifest) {
  const SpatialGrid grid(config.half_width, config.n);
  const FractionalOrder order(config.alpha);
  const WindowSpec window{config.window_width, 6.0};
  const SingularityMap map = singularity_map(order, config.probe_time,
                                             config.a_seq, config.x0_list,
                                             window, grid);
  write_decay_map_csv(map, (dir / "wavefront.csv").string());
  write_verdicts(map, (dir / "verdicts.txt").string());
  manifest.artifacts.push_back("wavefront.csv");
  manifest.artifacts.push_back("verdicts.txt");
  if (verbosity >= 1) {
    for (const std::string& verdict : map.verdicts) {
      std::cout << verdict << '\n';
    }
  }
  return 0;
}

int cmd_figures(const RunConfig& config, const fs::path& dir, int verbosity,
                Manifest& manifest) {
  const SpatialGrid grid(config.half_width, config.n);
  const std::vector<double> xs = linspace(config.x_min, config.x_max, config.x_count);
  const std::vector<std::pair<int, double>> presets = {
      {1, 1.5}, {2, 2.5}, {3, 2.0}};
  InitialData data;
  data.u0 = DataComponent::gaussian(0.1);
  data.v0 = DataComponent::zero();

  for (const auto& [index, alpha] : presets) {
    const FractionalOrder order(alpha);
    const fs::path fig_dir =
        dir / ("fig" + std::to_string(index) + "_alpha" + format_double(alpha));
    fs::create_directories(fig_dir);
    WaveField field = solve_at_points(data, grid, order, config.times, xs);
    print_warnings(field, verbosity);
    write_wave_field_csv(field, (fig_dir / "field.csv").string());
    write_field_sidecar(field, (fig_dir / "field.json").string());
    manifest.artifacts.push_back(fig_dir.filename().string() + "/field.csv");
    manifest.artifacts.push_back(fig_dir.filename().string() + "/field.json");
    for (std::size_t j = 0; j < config.times.size(); ++j) {
      std::vector<double> profile(field.profile(j),
                                  field.profile(j) + xs.size());
      const std::string name = "profile_t" + format_double(config.times[j]) + ".svg";
      write_svg_line_plot((fig_dir / name).string(), xs, profile,
                          "alpha = " + format_double(alpha) + ", t = " +
                              format_double(config.times[j]));
      manifest.artifacts.push_back(fig_dir.filename().string() + "/" + name);
    }
  }
  if (verbosity >= 1) {
    std::cout << "figures: wrote 3 figure directories under " << dir.string()
              << '\n';
  }
  return 0;
}

}  // namespace

int run(const RunConfig& config, int verbosity) {
  validate_config(config);
  const fs::path dir(config.out_dir);
  fs::create_directories(dir);
  write_resolved(config, (dir / "resolved.json").string());

  Manifest manifest;
  manifest.command = config.command;

  int status = 0;
  if (config.command == "simulate") {
    status = cmd_simulate(config, dir, verbosity, manifest);
  } else if (config.command == "validate") {
    status = cmd_validate(config, dir, verbosity, manifest);
  } else if (config.command == "dispersion") {
    status = cmd_dispersion(config, dir, verbosity, manifest);
  } else if (config.command == "regularity") {
    status = cmd_regularity(config, dir, verbosity, manifest);
  } else if (config.command == "wavefront") {
    status = cmd_wavefront(config, dir, verbosity, manifest);
  } else if (config.command == "figures") {
    status = cmd_figures(config, dir, verbosity, manifest);
  } else {
    throw std::invalid_argument("unknown command '" + config.command + "'");
  }
  manifest.write(dir);
  return status;
}

}  // namespace fracwave::cli
