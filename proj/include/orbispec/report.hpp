#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbispec/gamma_spectrum.hpp"
#include "orbispec/sunada.hpp"

namespace orbispec {

// stamped into every JSON document so downstream diffing can pin the layout
inline constexpr const char* kReportSchema = "orbispec/1";

enum class ReportFormat { Table, Json };

ReportFormat parse_format(const std::string& s);  // "table" | "json"

// shortest round-trip decimal; used everywhere a double is printed
std::string format_double(double x);

// rows -> aligned text table, two-space gutters, deterministic widths
std::string layout_table(const std::vector<std::vector<std::string>>& rows);

std::string render_sectors(const std::vector<GammaSpectrum>& specs, ReportFormat f);
std::string render_spectrum(const std::vector<GammaSpectrum>& specs, ReportFormat f);
std::string render_compare(const GammaSpectrum& a, const GammaSpectrum& b,
                           const CompareResult& r, ReportFormat f);

struct HeatReport {
  GammaSpectrum spec;
  HeatExpansion expansion;
  std::vector<std::pair<double, HeatValue>> values;
};

std::string render_heat(const std::vector<HeatReport>& reports, ReportFormat f);

std::string render_witness(const std::string& name_a, const std::string& name_b,
                           const AlmostConjugacyWitness& w, ReportFormat f);
std::string render_certificate(const std::string& name_a, const std::string& name_b,
                               const std::string& gamma, const GammaCertificate& c,
                               ReportFormat f);

}  // namespace orbispec
