#pragma once

#include <cstdint>
#include <string>

#include "echosim/spacetime.hpp"
#include "echosim/waveform.hpp"

namespace echosim {

// Scenario description parsed from "key = value" text. Defaults reproduce
// the library's standard benchmark scenario; every key is optional.
struct ScenarioConfig {
  TransformKind transform = TransformKind::Hsu;
  std::string waveform = "sine";  // sine|chirp|hyperbolic|barker|gaussian

  double fc = 3.0e8;           // Hz
  double pw = 1.0e-4;          // s
  double slope = 7.5e11;       // Hz/s
  double b = -0.0000111108;    // hyperbolic sweep parameter
  std::uint64_t seed = 1;      // gaussian code seed
  std::size_t n_codes = 13;    // coded sub-pulse count

  double v0 = 15625.0;         // m/s
  double alpha0 = 2.0e8;       // m/s^2
  double x0 = 6000.18;         // m
  double c = kDefaultC;        // m/s

  double t_start = 0.0;        // s
  double dt = 1.32118e-9;      // s
  std::size_t n_samples = 219507;

  std::string output_path = "received.csv";

  MotionParams make_motion() const;
  WaveformSpec make_waveform() const;
};

// Parses and fully validates; unknown keys, malformed numbers, duplicate
// keys and invariant violations raise ConfigError naming the line or key.
ScenarioConfig parse_config(const std::string& text);

ScenarioConfig load_config_file(const std::string& path);

}  // namespace echosim
