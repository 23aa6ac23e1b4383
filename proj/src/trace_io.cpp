#include "echosim/trace_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace echosim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trace_csv(const std::string& path, const SignalTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "t_s,re,im\n";
  for (std::size_t k = 0; k < trace.size(); ++k) {
    out << format_double(trace.time_at(k)) << ',' << format_double(trace.samples[k].real())
        << ',' << format_double(trace.samples[k].imag()) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

namespace {

double parse_field(const std::string& field, const std::string& path, std::size_t line) {
  const char* begin = field.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw IoError(path + ":" + std::to_string(line) + ": bad numeric field '" + field + "'");
  }
  return v;
}

}  // namespace

SignalTrace read_trace_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "t_s,re,im") {
    throw IoError(path + ": expected header 't_s,re,im'");
  }
  std::vector<double> ts;
  SignalTrace trace;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string f1, f2, f3;
    if (!std::getline(ss, f1, ',') || !std::getline(ss, f2, ',') || !std::getline(ss, f3)) {
      throw IoError(path + ":" + std::to_string(lineno) + ": expected three fields");
    }
    ts.push_back(parse_field(f1, path, lineno));
    trace.samples.emplace_back(parse_field(f2, path, lineno), parse_field(f3, path, lineno));
  }
  if (ts.size() < 2) {
    throw IoError(path + ": need at least two rows to recover the sample interval");
  }
  trace.t_start = ts.front();
  trace.dt = ts[1] - ts[0];
  return trace;
}

void write_xy_csv(const std::string& path, const std::string& x_name,
                  std::span<const double> xs, const std::string& y_name,
                  std::span<const double> ys) {
  if (xs.size() != ys.size()) throw IoError("write_xy_csv: column size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << x_name << ',' << y_name << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]) << ',' << format_double(ys[i]) << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_multiseries_csv(const std::string& path, const std::string& x_name,
                           std::span<const double> xs,
                           const std::vector<std::string>& series_names,
                           const std::vector<std::vector<double>>& series) {
  if (series_names.size() != series.size()) {
    throw IoError("write_multiseries_csv: series name/count mismatch");
  }
  for (const auto& s : series) {
    if (s.size() != xs.size()) throw IoError("write_multiseries_csv: column size mismatch");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << x_name;
  for (const auto& name : series_names) out << ',' << name;
  out << '\n';
  for (std::size_t i = 0; i < xs.size(); ++i) {
    out << format_double(xs[i]);
    for (const auto& s : series) out << ',' << format_double(s[i]);
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace echosim
