#include "fracwave/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace fracwave {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) {
    throw std::runtime_error("write failed: " + path);
  }
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      break;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return cells;
}

}  // namespace

std::string format_double(double v) {
  std::array<char, 64> buf;
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                    std::chars_format::general, 17);
  return std::string(buf.data(), result.ptr);
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto result = std::from_chars(first, last, value);
  if (result.ec != std::errc{} || result.ptr != last) {
    throw std::runtime_error("not a strict decimal token: '" + token + "'");
  }
  return value;
}

void write_wave_field_csv(const WaveField& field, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "x,t,u\n";
  for (std::size_t j = 0; j < field.times.size(); ++j) {
    for (std::size_t i = 0; i < field.x.size(); ++i) {
      out << format_double(field.x[i]) << ',' << format_double(field.times[j])
          << ',' << format_double(field.value(i, j)) << '\n';
    }
  }
  finish(out, path);
}

std::vector<FieldRow> read_wave_field_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path);
  }
  std::string line;
  if (!std::getline(in, line) || line != "x,t,u") {
    throw std::runtime_error("bad field CSV header in " + path);
  }
  std::vector<FieldRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line);
    if (cells.size() != 3) {
      throw std::runtime_error("bad field CSV row in " + path + ": " + line);
    }
    rows.push_back(
        {parse_double(cells[0]), parse_double(cells[1]), parse_double(cells[2])});
  }
  return rows;
}

void write_field_sidecar(const WaveField& field, const std::string& path) {
  nlohmann::json j;
  j["alpha"] = field.meta.alpha;
  j["data"]["u0"] = field.meta.u0_desc;
  j["data"]["v0"] = field.meta.v0_desc;
  j["method"] = field.meta.method;
  j["tolerance"] = field.meta.tolerance;
  if (field.meta.grid_n > 0) {
    j["grid"]["half_width"] = field.meta.grid_half_width;
    j["grid"]["n"] = field.meta.grid_n;
  }
  j["times"] = field.times;
  j["x_count"] = field.x.size();
  j["warnings"] = field.meta.warnings;
  j["software_version"] = field.meta.version;

  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

void write_error_bounds_csv(const ProfileResult& result,
                            const std::string& path) {
  std::ofstream out = open_out(path);
  out << "x,t,error_bound\n";
  const WaveField& field = result.field;
  for (std::size_t j = 0; j < field.times.size(); ++j) {
    for (std::size_t i = 0; i < field.x.size(); ++i) {
      out << format_double(field.x[i]) << ',' << format_double(field.times[j])
          << ',' << format_double(result.error_bounds[j * field.x.size() + i])
          << '\n';
    }
  }
  finish(out, path);
}

void write_dispersion_csv(const DispersionCurve& curve,
                          const std::string& path) {
  std::ofstream out = open_out(path);
  out << "xi,omega,phase_velocity,group_velocity\n";
  for (std::size_t k = 0; k < curve.xi.size(); ++k) {
    out << format_double(curve.xi[k]) << ',' << format_double(curve.omega[k])
        << ',' << format_double(curve.phase_velocity[k]) << ','
        << format_double(curve.group_velocity[k]) << '\n';
  }
  finish(out, path);
}

void write_report_csv(const ResidualReport& report, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "t,value,reference\n";
  for (const ReportRow& row : report.rows) {
    out << format_double(row.t) << ',' << format_double(row.value) << ','
        << format_double(row.reference) << '\n';
  }
  finish(out, path);
}

void write_report_sidecar(const ResidualReport& report,
                          const std::string& path) {
  nlohmann::json j;
  j["tag"] = report.tag;
  j["sup_residual"] = report.sup_residual;
  j["notes"] = report.notes;
  std::ofstream out = open_out(path);
  out << j.dump(2) << '\n';
  finish(out, path);
}

void write_decay_map_csv(const SingularityMap& map, const std::string& path) {
  std::ofstream out = open_out(path);
  out << "alpha,a,x0,time,window_width,exponent,fit_quality,bands_used,"
         "reliable,theory_backed\n";
  for (std::size_t ia = 0; ia < map.a_values.size(); ++ia) {
    for (std::size_t ix = 0; ix < map.x0_values.size(); ++ix) {
      const DecayProfile& p = map.profiles[ia][ix];
      out << format_double(p.alpha) << ',' << format_double(map.a_values[ia])
          << ',' << format_double(p.x0) << ',' << format_double(p.time) << ','
          << format_double(p.window_width) << ','
          << format_double(p.fitted_exponent) << ','
          << format_double(p.fit_quality) << ',' << p.bands_used << ','
          << (p.reliable ? 1 : 0) << ',' << (p.theory_backed ? 1 : 0) << '\n';
    }
  }
  finish(out, path);
}

void write_verdicts(const SingularityMap& map, const std::string& path) {
  std::ofstream out = open_out(path);
  for (const std::string& verdict : map.verdicts) {
    out << verdict << '\n';
  }
  finish(out, path);
}

}  // namespace fracwave
