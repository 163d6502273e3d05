#pragma once

#include <string>
#include <vector>

#include "fracwave/analysis.hpp"
#include "fracwave/field.hpp"
#include "fracwave/multiplier.hpp"
#include "fracwave/quadrature_solver.hpp"

namespace fracwave {

/// Locale-independent decimal rendering with 17 significant digits, enough
/// to round-trip any double exactly. All CSV output goes through this, so
/// identical data produces byte-identical files.
std::string format_double(double v);

/// Strict parser: the whole token must be consumed. Throws on failure.
double parse_double(const std::string& token);

/// Long-format field CSV: header "x,t,u", one row per (time, location) with
/// times outermost, LF line endings.
void write_wave_field_csv(const WaveField& field, const std::string& path);

struct FieldRow {
  double x;
  double t;
  double u;
};

/// Strict reader for the field CSV (exact header, fully numeric cells).
std::vector<FieldRow> read_wave_field_csv(const std::string& path);

/// JSON sidecar with the run metadata (alpha, data, grid, method,
/// tolerances, warnings, software version).
void write_field_sidecar(const WaveField& field, const std::string& path);

/// Companion CSV for quadrature runs: header "x,t,error_bound".
void write_error_bounds_csv(const ProfileResult& result,
                            const std::string& path);

/// Dispersion CSV: header "xi,omega,phase_velocity,group_velocity".
void write_dispersion_csv(const DispersionCurve& curve,
                          const std::string& path);

/// Residual-report CSV: header "t,value,reference"; the tag, sup residual
/// and notes go to the JSON sidecar.
void write_report_csv(const ResidualReport& report, const std::string& path);
void write_report_sidecar(const ResidualReport& report,
                          const std::string& path);

/// Decay-probe table: one row per (a, x0) cell of the singularity map.
void write_decay_map_csv(const SingularityMap& map, const std::string& path);

/// One verdict line per localization prediction, plain text.
void write_verdicts(const SingularityMap& map, const std::string& path);

}  // namespace fracwave
