#include "mbent/report.hpp"

#include <fmt/format.h>

namespace mbent {

std::string format_fixed(double value, int decimals) {
  std::string out = fmt::format("{:.{}f}", value, decimals);
  // Values that round to zero print without a sign.
  if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

std::string format_csv(double value) {
  return fmt::format("{:.12g}", value == 0.0 ? 0.0 : value);
}

std::string render_measure(const MeasureReport& report, const SystemSpec& system) {
  std::string out = fmt::format("eta={} classification={}\nkinds={}\n", format_fixed(report.eta),
                                to_string(report.classification), report.local_entropies.size());
  for (std::size_t i = 0; i < report.local_entropies.size(); ++i)
    out += fmt::format("S_{}={} p_{}={} name_{}={}\n", i, format_fixed(report.local_entropies[i]),
                       i, report.bases[i], i, system.kind(i).name);
  out += fmt::format("partial_analysis={}\n", report.partial_analysis ? 1 : 0);
  return out;
}

void write_yrast_csv(std::ostream& out, std::span<const bec::YrastPoint> points) {
  out << "n,eta,energy,degenerate\n";
  for (const auto& p : points)
    out << p.n << ',' << format_csv(p.eta) << ',' << format_csv(p.energy) << ','
        << (p.degenerate ? 1 : 0) << '\n';
}

void write_occupation_csv(std::ostream& out, std::span<const bec::YrastPoint> points) {
  if (points.empty()) return;
  out << "n";
  for (int l = 0; l <= points.front().L; ++l) out << ",phi_" << l;
  out << '\n';
  for (const auto& p : points) {
    out << p.n;
    for (double x : p.phi) out << ',' << format_csv(x);
    out << '\n';
  }
}

}  // namespace mbent
