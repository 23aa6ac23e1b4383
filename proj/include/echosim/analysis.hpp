#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "echosim/errors.hpp"

namespace echosim {

// Uniformly sampled complex signal.
struct SignalTrace {
  double t_start = 0.0;  // s
  double dt = 0.0;       // s
  std::vector<std::complex<double>> samples;

  std::size_t size() const { return samples.size(); }
  double time_at(std::size_t k) const { return t_start + dt * static_cast<double>(k); }
};

struct PeakMetrics {
  std::size_t peak_index = 0;
  double peak_time = 0.0;       // axis value of the global magnitude peak
  double peak_magnitude = 0.0;
  double width_3db = 0.0;       // half-power width, axis units, floored at dt
  double pslr_db = 0.0;         // peak-to-max-sidelobe ratio, dB
};

// samples[k] = evaluator(t_start + k*dt). The evaluator must be pure; large
// traces are filled from several threads.
SignalTrace sample_received(const std::function<std::complex<double>(double)>& evaluator,
                            double t_start, double dt, std::size_t n);

struct SpectrumTable {
  double df = 0.0;  // bin spacing, Hz
  std::vector<double> freq_hz;
  std::vector<double> magnitude;
};

// DFT magnitude table, zero-padded to four times the next power of two.
// Frequencies run 0 .. (nfft-1)/(nfft*dt) on the one-sided complex
// convention.
SpectrumTable spectrum(const SignalTrace& trace);

// |DTFT| maximizer by golden section within [f0 - halfwidth, f0 + halfwidth].
double refine_spectrum_peak(const SignalTrace& trace, double f0, double halfwidth);

// Coarse FFT argmax followed by a one-bin refinement.
double spectrum_peak_frequency(const SignalTrace& trace);

// Full cross-correlation of received against the conjugated reference,
// normalized so the reference autocorrelation peak equals one. Requires
// equal dt; unequal lengths are zero-padded to the longer one. The lag axis
// (t_start of the result) accounts for the traces' own start times.
SignalTrace matched_filter(const SignalTrace& received, const SignalTrace& reference);

PeakMetrics peak_metrics(const SignalTrace& trace);

// Same metrics over a plain magnitude array with axis origin x0, spacing dx.
PeakMetrics magnitude_peak_metrics(std::span<const double> mag, double x0, double dx);

namespace detail {

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> data,
                                      bool inverse);

// Both run the identical lag convention: result[k] corresponds to lag
// k - (nb - 1), r[lag] = sum_m a[m] * conj(b[m - lag]).
std::vector<std::complex<double>> xcorr_direct(std::span<const std::complex<double>> a,
                                               std::span<const std::complex<double>> b);
std::vector<std::complex<double>> xcorr_fft(std::span<const std::complex<double>> a,
                                            std::span<const std::complex<double>> b);

std::size_t next_pow2(std::size_t n);

}  // namespace detail

}  // namespace echosim
