#include "run_config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace fracwave::cli {

namespace {

const std::set<std::string> kCommands = {"simulate",  "dispersion", "regularity",
                                         "wavefront", "validate",   "figures"};
const std::set<std::string> kMethods = {"spectral", "quadrature", "both"};

const std::set<std::string> kKeys = {
    "command",   "alpha",     "a",       "v0_a",       "method",
    "half_width", "n",        "times",   "x_min",      "x_max",
    "x_count",   "s",         "tolerance", "abs_tol",  "window_width",
    "a_seq",     "x0_list",   "probe_time", "xi_max",  "xi_count",
    "out_dir"};

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void fail(const std::string& key, const std::string& constraint) {
  throw std::invalid_argument("config key '" + key + "': " + constraint);
}

}  // namespace

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open config file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& err) {
    throw std::runtime_error("config file " + path + " is not valid JSON: " +
                             err.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error("config file " + path + " must hold a JSON object");
  }
  for (const auto& item : j.items()) {
    if (!kKeys.count(item.key())) {
      throw std::invalid_argument("unknown config key '" + item.key() + "'");
    }
  }

  const auto get = [&](const char* key, auto& target) {
    if (j.contains(key)) j.at(key).get_to(target);
  };
  get("command", base.command);
  get("alpha", base.alpha);
  get("a", base.a);
  get("v0_a", base.v0_a);
  get("method", base.method);
  get("half_width", base.half_width);
  get("n", base.n);
  get("times", base.times);
  get("x_min", base.x_min);
  get("x_max", base.x_max);
  get("x_count", base.x_count);
  get("s", base.s);
  get("tolerance", base.tolerance);
  get("abs_tol", base.abs_tol);
  get("window_width", base.window_width);
  get("a_seq", base.a_seq);
  get("x0_list", base.x0_list);
  get("probe_time", base.probe_time);
  get("xi_max", base.xi_max);
  get("xi_count", base.xi_count);
  get("out_dir", base.out_dir);
  return base;
}

void validate_config(const RunConfig& config) {
  if (!kCommands.count(config.command)) {
    fail("command", "must be one of simulate, dispersion, regularity, "
                    "wavefront, validate, figures");
  }
  if (!(config.alpha > 1.0 && config.alpha < 3.0)) {
    fail("alpha", "must lie strictly inside the open interval (1,3)");
  }
  if (!(config.a > 0.0)) fail("a", "must be > 0");
  if (config.v0_a < 0.0) fail("v0_a", "must be >= 0 (0 selects v0 = 0)");
  if (!kMethods.count(config.method)) {
    fail("method", "must be spectral, quadrature, or both");
  }
  if (!(config.half_width > 0.0)) fail("half_width", "must be > 0");
  if (!power_of_two(config.n) || config.n < 8) {
    fail("n", "must be a power of two >= 8");
  }
  if (config.times.empty()) fail("times", "must not be empty");
  for (double t : config.times) {
    if (!(t >= 0.0)) fail("times", "every output time must be >= 0");
  }
  if (!(config.x_max > config.x_min)) fail("x_max", "must exceed x_min");
  if (config.x_count < 2) fail("x_count", "must be >= 2");
  if (!(config.tolerance > 0.0)) fail("tolerance", "must be > 0");
  if (!(config.abs_tol > 0.0)) fail("abs_tol", "must be > 0");
  if (!(config.window_width > 0.0)) fail("window_width", "must be > 0");
  if (config.a_seq.empty()) fail("a_seq", "must not be empty");
  for (double a : config.a_seq) {
    if (!(a > 0.0)) fail("a_seq", "every width must be > 0");
  }
  if (!(config.probe_time > 0.0)) fail("probe_time", "must be > 0");
  if (!(config.xi_max > 0.0)) fail("xi_max", "must be > 0");
  if (config.xi_count < 2) fail("xi_count", "must be >= 2");
  if (config.out_dir.empty()) fail("out_dir", "must not be empty");
}

void write_resolved(const RunConfig& config, const std::string& path) {
  nlohmann::json j;
  j["command"] = config.command;
  j["alpha"] = config.alpha;
  j["a"] = config.a;
  j["v0_a"] = config.v0_a;
  j["method"] = config.method;
  j["half_width"] = config.half_width;
  j["n"] = config.n;
  j["times"] = config.times;
  j["x_min"] = config.x_min;
  j["x_max"] = config.x_max;
  j["x_count"] = config.x_count;
  j["s"] = config.s;
  j["tolerance"] = config.tolerance;
  j["abs_tol"] = config.abs_tol;
  j["window_width"] = config.window_width;
  j["a_seq"] = config.a_seq;
  j["x0_list"] = config.x0_list;
  j["probe_time"] = config.probe_time;
  j["xi_max"] = config.xi_max;
  j["xi_count"] = config.xi_count;
  j["out_dir"] = config.out_dir;

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << '\n';
  out.flush();
  if (!out) throw std::runtime_error("write failed: " + path);
}

int verbosity_from_env() {
  const char* value = std::getenv("FRACWAVE_VERBOSE");
  if (value == nullptr) return 1;
  try {
    return std::stoi(value);
  } catch (...) {
    return 1;
  }
}

}  // namespace fracwave::cli
