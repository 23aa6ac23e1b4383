#include "echosim/waveform.hpp"

#include <cmath>

namespace echosim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix_out(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform in (0, 1), open at both ends so log() stays finite.
double counter_u01(std::uint64_t seed, std::uint64_t ctr) {
  const std::uint64_t w = splitmix_out(seed + (ctr + 1) * 0x9E3779B97F4A7C15ULL);
  return (static_cast<double>(w >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace

void WaveformSpec::validate() const {
  if (!(pw > 0.0)) throw DomainError("WaveformSpec: pw must be positive");
  if (!(fc > 0.0)) throw DomainError("WaveformSpec: fc must be positive");
  if (family == WaveformFamily::Coded && codes.empty()) {
    throw DomainError("WaveformSpec: coded waveform needs at least one code");
  }
  if (family == WaveformFamily::Hyperbolic && !(1.0 + b * fc * pw > 0.0)) {
    // log argument must stay positive over the whole gate [0, pw)
    throw DomainError("WaveformSpec: 1 + b*fc*t reaches zero inside the pulse");
  }
}

double heaviside(double u) { return u >= 0.0 ? 1.0 : 0.0; }

std::complex<double> eval_reference(const WaveformSpec& spec, double t) {
  const double gate = heaviside(t) - heaviside(t - spec.pw);
  switch (spec.family) {
    case WaveformFamily::Sine:
      if (gate == 0.0) return {0.0, 0.0};
      return std::polar(1.0, kTwoPi * spec.fc * t);
    case WaveformFamily::Chirp:
      if (gate == 0.0) return {0.0, 0.0};
      return std::polar(1.0, -kTwoPi * (spec.fc * t + spec.slope * t * t));
    case WaveformFamily::Hyperbolic: {
      if (gate == 0.0) return {0.0, 0.0};
      const double u = spec.b * spec.fc * t;
      if (!(1.0 + u > 0.0)) {
        throw DomainError("hyperbolic waveform: 1 + b*fc*t <= 0 inside the gate");
      }
      return std::polar(1.0, (-kTwoPi / spec.b) * std::log1p(u));
    }
    case WaveformFamily::Coded: {
      if (gate == 0.0) return {0.0, 0.0};
      const double seg = spec.dtseg();
      double amp = 0.0;
      for (std::size_t i = 0; i < spec.codes.size(); ++i) {
        const double g = heaviside(t - static_cast<double>(i) * seg) -
                         heaviside(t - static_cast<double>(i + 1) * seg);
        amp += spec.codes[i] * g;
      }
      return amp * std::polar(1.0, -kTwoPi * spec.fc * t);
    }
  }
  return {0.0, 0.0};
}

std::vector<double> barker13() {
  return {1, 1, 1, 1, 1, -1, -1, 1, 1, -1, 1, -1, 1};
}

std::vector<double> gaussian_codes(std::uint64_t seed, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u1 = counter_u01(seed, 2 * static_cast<std::uint64_t>(i));
    const double u2 = counter_u01(seed, 2 * static_cast<std::uint64_t>(i) + 1);
    out[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }
  return out;
}

std::string to_string(WaveformFamily family) {
  switch (family) {
    case WaveformFamily::Sine: return "sine";
    case WaveformFamily::Chirp: return "chirp";
    case WaveformFamily::Hyperbolic: return "hyperbolic";
    case WaveformFamily::Coded: return "coded";
  }
  return "?";
}

}  // namespace echosim
