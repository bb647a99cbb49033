#pragma once

#include <ostream>
#include <span>
#include <string>

#include "mbent/bec.hpp"
#include "mbent/entanglement.hpp"

namespace mbent {

/// Fixed notation with `decimals` digits after the point; never prints "-0".
std::string format_fixed(double value, int decimals = 12);
/// Shortest form with 12 significant digits (CSV cells); never prints "-0".
std::string format_csv(double value);

/// Flat key=value block:
///
///   eta=<value> classification=<name>
///   kinds=<M>
///   S_<i>=<value> p_<i>=<base> name_<i>=<kind name>    (one line per kind)
///   partial_analysis=<0|1>
std::string render_measure(const MeasureReport& report, const SystemSpec& system);

/// Header `n,eta,energy,degenerate`, one row per point, LF line endings.
void write_yrast_csv(std::ostream& out, std::span<const bec::YrastPoint> points);

/// Header `n,phi_0,...,phi_L`, one row per point.
void write_occupation_csv(std::ostream& out, std::span<const bec::YrastPoint> points);

}  // namespace mbent
