#pragma once

#include <span>
#include <string>
#include <vector>

#include "echosim/analysis.hpp"

namespace echosim {

// Shortest decimal that round-trips a double (17 significant digits).
std::string format_double(double v);

// CSV with header "t_s,re,im", LF line endings, 17-significant-digit floats.
void write_trace_csv(const std::string& path, const SignalTrace& trace);

// Inverse of write_trace_csv; needs at least two rows to recover dt.
SignalTrace read_trace_csv(const std::string& path);

// Two-column CSV (header "<x_name>,<y_name>").
void write_xy_csv(const std::string& path, const std::string& x_name,
                  std::span<const double> xs, const std::string& y_name,
                  std::span<const double> ys);

// Wide CSV: x column followed by one value column per series.
void write_multiseries_csv(const std::string& path, const std::string& x_name,
                           std::span<const double> xs,
                           const std::vector<std::string>& series_names,
                           const std::vector<std::vector<double>>& series);

}  // namespace echosim
