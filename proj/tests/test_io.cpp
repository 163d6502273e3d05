#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "fracwave/io.hpp"
#include "fracwave/svg.hpp"
#include "fracwave/version.hpp"

using namespace fracwave;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path dir = fs::temp_directory_path() / "fracwave_io_test";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

WaveField small_field() {
  WaveField field;
  field.x = {-1.0, 0.0, 1.5};
  field.times = {0.0, 2.5};
  field.values = {0.25, -1.0 / 3.0, 1e-17, std::numbers::pi, -0.0, 42.0};
  field.meta.alpha = 2.0;
  field.meta.u0_desc = "gaussian_delta(a=0.100000)";
  field.meta.v0_desc = "zero";
  field.meta.method = "spectral";
  field.meta.version = kVersion;
  return field;
}

}  // namespace

TEST_CASE("format_double round-trips doubles exactly") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
  std::uniform_int_distribution<int> exponent(-300, 300);
  for (int i = 0; i < 1000; ++i) {
    const double v = std::ldexp(mantissa(rng), exponent(rng));
    const double back = parse_double(format_double(v));
    CHECK(std::memcmp(&v, &back, sizeof v) == 0);
  }
  for (double v : {0.0, -0.0, 1e308, 1e-308, std::numbers::pi, 0.1}) {
    const double back = parse_double(format_double(v));
    CHECK(std::memcmp(&v, &back, sizeof v) == 0);
  }
}

TEST_CASE("strict parser rejects loose tokens") {
  CHECK_THROWS(parse_double("1,5"));
  CHECK_THROWS(parse_double("1.5x"));
  CHECK_THROWS(parse_double(""));
  CHECK_THROWS(parse_double(" 1.5"));
  CHECK(parse_double("-2.5e-3") == -2.5e-3);
}

TEST_CASE("wave field CSV round-trip is exact and deterministic") {
  const fs::path dir = temp_dir();
  const WaveField field = small_field();
  const fs::path path = dir / "field.csv";
  write_wave_field_csv(field, path.string());

  const std::string first = slurp(path);
  CHECK(first.rfind("x,t,u\n", 0) == 0);
  CHECK(first.find('\r') == std::string::npos);

  write_wave_field_csv(field, path.string());
  CHECK(slurp(path) == first);

  const std::vector<FieldRow> rows = read_wave_field_csv(path.string());
  REQUIRE(rows.size() == 6);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < field.times.size(); ++j) {
    for (std::size_t i = 0; i < field.x.size(); ++i, ++idx) {
      CHECK(rows[idx].x == field.x[i]);
      CHECK(rows[idx].t == field.times[j]);
      CHECK(rows[idx].u == field.value(i, j));
    }
  }
}

TEST_CASE("empty times produce a header-only CSV") {
  const fs::path dir = temp_dir();
  WaveField field;
  field.x = {0.0, 1.0};
  const fs::path path = dir / "empty.csv";
  write_wave_field_csv(field, path.string());
  CHECK(slurp(path) == "x,t,u\n");
  CHECK(read_wave_field_csv(path.string()).empty());
}

TEST_CASE("strict reader rejects malformed files") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "bad.csv";
  {
    std::ofstream out(path, std::ios::binary);
    out << "x,t,v\n1,2,3\n";
  }
  CHECK_THROWS(read_wave_field_csv(path.string()));
  {
    std::ofstream out(path, std::ios::binary);
    out << "x,t,u\n1;2;3\n";
  }
  CHECK_THROWS(read_wave_field_csv(path.string()));
}

TEST_CASE("sidecar records the metadata") {
  const fs::path dir = temp_dir();
  const WaveField field = small_field();
  const fs::path path = dir / "field.json";
  write_field_sidecar(field, path.string());
  const std::string text = slurp(path);
  CHECK(text.find("\"method\": \"spectral\"") != std::string::npos);
  CHECK(text.find("\"software_version\"") != std::string::npos);
  CHECK(text.find("gaussian_delta") != std::string::npos);
}

TEST_CASE("dispersion CSV has the documented header") {
  const fs::path dir = temp_dir();
  DispersionCurve curve;
  curve.xi = {0.0, 1.0};
  curve.omega = {0.0, 0.5};
  curve.phase_velocity = {1.0, 0.5};
  curve.group_velocity = {1.0, 0.25};
  const fs::path path = dir / "dispersion.csv";
  write_dispersion_csv(curve, path.string());
  const std::string text = slurp(path);
  CHECK(text.rfind("xi,omega,phase_velocity,group_velocity\n", 0) == 0);
}

TEST_CASE("report CSV and sidecar") {
  const fs::path dir = temp_dir();
  ResidualReport report;
  report.tag = "energy";
  report.sup_residual = 1e-14;
  report.rows = {{0.5, 1e-15, 0.0}, {5.0, 1e-14, 0.0}};
  report.notes = {"sup over three times"};
  write_report_csv(report, (dir / "report.csv").string());
  write_report_sidecar(report, (dir / "report.json").string());
  CHECK(slurp(dir / "report.csv").rfind("t,value,reference\n", 0) == 0);
  CHECK(slurp(dir / "report.json").find("\"energy\"") != std::string::npos);
}

TEST_CASE("svg plot writer emits a polyline") {
  const fs::path dir = temp_dir();
  const fs::path path = dir / "plot.svg";
  write_svg_line_plot(path.string(), {0.0, 1.0, 2.0}, {0.0, 1.0, 0.5}, "test");
  const std::string text = slurp(path);
  CHECK(text.rfind("<svg", 0) == 0);
  CHECK(text.find("<polyline") != std::string::npos);
  CHECK_THROWS(write_svg_line_plot(path.string(), {}, {}, "empty"));
}
