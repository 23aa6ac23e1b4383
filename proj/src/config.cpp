#include "echosim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace echosim {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

double to_double(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(v)) {
    throw ConfigError(key + ": not a finite number: '" + value + "'");
  }
  return v;
}

std::uint64_t to_u64(const std::string& key, const std::string& value) {
  const char* begin = value.c_str();
  char* end = nullptr;
  const unsigned long long v = std::strtoull(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw ConfigError(key + ": not a non-negative integer: '" + value + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::size_t to_count(const std::string& key, const std::string& value) {
  const auto v = to_u64(key, value);
  if (v == 0) throw ConfigError(key + ": must be >= 1");
  return static_cast<std::size_t>(v);
}

}  // namespace

MotionParams ScenarioConfig::make_motion() const {
  return MotionParams{v0, alpha0, x0, c};
}

WaveformSpec ScenarioConfig::make_waveform() const {
  WaveformSpec spec;
  spec.fc = fc;
  spec.pw = pw;
  if (waveform == "sine") {
    spec.family = WaveformFamily::Sine;
  } else if (waveform == "chirp") {
    spec.family = WaveformFamily::Chirp;
    spec.slope = slope;
  } else if (waveform == "hyperbolic") {
    spec.family = WaveformFamily::Hyperbolic;
    spec.b = b;
  } else if (waveform == "barker") {
    spec.family = WaveformFamily::Coded;
    spec.codes = barker13();
  } else if (waveform == "gaussian") {
    spec.family = WaveformFamily::Coded;
    spec.codes = gaussian_codes(seed, n_codes);
  } else {
    throw ConfigError("waveform: unknown name '" + waveform + "'");
  }
  return spec;
}

ScenarioConfig parse_config(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key or value");
    }
    if (kv.count(key)) {
      throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    kv[key] = value;
  }

  ScenarioConfig cfg;
  for (const auto& [key, value] : kv) {
    if (key == "transform") cfg.transform = transform_from_string(value);
    else if (key == "waveform") cfg.waveform = value;
    else if (key == "fc") cfg.fc = to_double(key, value);
    else if (key == "pw") cfg.pw = to_double(key, value);
    else if (key == "slope") cfg.slope = to_double(key, value);
    else if (key == "b") cfg.b = to_double(key, value);
    else if (key == "seed") cfg.seed = to_u64(key, value);
    else if (key == "n_codes") cfg.n_codes = to_count(key, value);
    else if (key == "v0") cfg.v0 = to_double(key, value);
    else if (key == "alpha0") cfg.alpha0 = to_double(key, value);
    else if (key == "x0") cfg.x0 = to_double(key, value);
    else if (key == "c") cfg.c = to_double(key, value);
    else if (key == "t_start") cfg.t_start = to_double(key, value);
    else if (key == "dt") cfg.dt = to_double(key, value);
    else if (key == "n_samples") cfg.n_samples = to_count(key, value);
    else if (key == "output_path") cfg.output_path = value;
    else throw ConfigError("unknown key '" + key + "'");
  }

  // invariants, reported with the offending key name
  if (!(cfg.c > 0.0)) throw ConfigError("c: must be positive");
  if (!(std::abs(cfg.v0) < cfg.c)) throw ConfigError("v0: |v0| must be < c");
  if (!(cfg.fc > 0.0)) throw ConfigError("fc: must be positive");
  if (!(cfg.pw > 0.0)) throw ConfigError("pw: must be positive");
  if (!(cfg.dt > 0.0)) throw ConfigError("dt: must be positive");
  if (cfg.waveform == "hyperbolic" && !(1.0 + cfg.b * cfg.fc * cfg.pw > 0.0)) {
    throw ConfigError("b: 1 + b*fc*t reaches zero inside the pulse");
  }
  cfg.make_waveform();  // rejects unknown waveform names
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace echosim
