#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "echosim/errors.hpp"

namespace echosim {

enum class WaveformFamily { Sine, Chirp, Hyperbolic, Coded };

// One transmitted reference waveform family with its parameters.
struct WaveformSpec {
  WaveformFamily family = WaveformFamily::Sine;
  double fc = 3.0e8;   // carrier frequency, Hz
  double pw = 1.0e-4;  // pulse width, s
  double slope = 0.0;  // chirp rate, Hz/s (Chirp only)
  double b = 0.0;      // hyperbolic sweep parameter (Hyperbolic only)
  std::vector<double> codes;  // sub-pulse amplitudes (Coded only)

  double dtseg() const { return pw / static_cast<double>(codes.size()); }
  void validate() const;
};

// Unit step with heaviside(0) = 1; every pulse gate is [0, pw).
double heaviside(double u);

// Complex value of the transmitted waveform at clock time t.
std::complex<double> eval_reference(const WaveformSpec& spec, double t);

std::vector<double> barker13();

// Deterministic standard-normal deviates: a splitmix64 counter stream fed
// through Box-Muller. Same seed, same sequence, on every platform.
std::vector<double> gaussian_codes(std::uint64_t seed, std::size_t n);

std::string to_string(WaveformFamily family);

}  // namespace echosim
