#include "echosim/analysis.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <thread>

namespace echosim {

namespace detail {

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

namespace {
// FFTW planning is not thread-safe; execution of a ready plan is.
std::mutex& plan_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

std::vector<std::complex<double>> fft(std::vector<std::complex<double>> data,
                                      bool inverse) {
  const int n = static_cast<int>(data.size());
  if (n == 0) return data;
  auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    plan = fftw_plan_dft_1d(n, ptr, ptr, inverse ? FFTW_BACKWARD : FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(plan);
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : data) v *= scale;
  }
  return data;
}

std::vector<std::complex<double>> xcorr_direct(std::span<const std::complex<double>> a,
                                               std::span<const std::complex<double>> b) {
  const std::ptrdiff_t na = static_cast<std::ptrdiff_t>(a.size());
  const std::ptrdiff_t nb = static_cast<std::ptrdiff_t>(b.size());
  std::vector<std::complex<double>> out(static_cast<std::size_t>(na + nb - 1));
  for (std::ptrdiff_t k = -(nb - 1); k < na; ++k) {
    std::complex<double> acc{0.0, 0.0};
    const std::ptrdiff_t mlo = std::max<std::ptrdiff_t>(0, k);
    const std::ptrdiff_t mhi = std::min(na - 1, k + nb - 1);
    for (std::ptrdiff_t midx = mlo; midx <= mhi; ++midx) {
      acc += a[static_cast<std::size_t>(midx)] *
             std::conj(b[static_cast<std::size_t>(midx - k)]);
    }
    out[static_cast<std::size_t>(k + nb - 1)] = acc;
  }
  return out;
}

std::vector<std::complex<double>> xcorr_fft(std::span<const std::complex<double>> a,
                                            std::span<const std::complex<double>> b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t nout = na + nb - 1;
  const std::size_t nfft = next_pow2(nout);
  std::vector<std::complex<double>> fa(nfft), fb(nfft);
  std::copy(a.begin(), a.end(), fa.begin());
  std::copy(b.begin(), b.end(), fb.begin());
  fa = fft(std::move(fa), false);
  fb = fft(std::move(fb), false);
  for (std::size_t i = 0; i < nfft; ++i) fa[i] *= std::conj(fb[i]);
  fa = fft(std::move(fa), true);
  // circular layout: negative lags live at the tail
  std::vector<std::complex<double>> out(nout);
  for (std::size_t i = 0; i < nb - 1; ++i) out[i] = fa[nfft - (nb - 1) + i];
  for (std::size_t i = 0; i < na; ++i) out[nb - 1 + i] = fa[i];
  return out;
}

}  // namespace detail

SignalTrace sample_received(const std::function<std::complex<double>(double)>& evaluator,
                            double t_start, double dt, std::size_t n) {
  if (n < 1) throw DomainError("sample_received: n must be >= 1");
  if (!(dt > 0.0)) throw DomainError("sample_received: dt must be positive");
  SignalTrace trace{t_start, dt, std::vector<std::complex<double>>(n)};
  const auto fill = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k) {
      trace.samples[k] = evaluator(t_start + dt * static_cast<double>(k));
    }
  };
  const std::size_t min_parallel = 1u << 15;
  unsigned workers = std::thread::hardware_concurrency();
  if (n < min_parallel || workers < 2) {
    fill(0, n);
    return trace;
  }
  workers = std::min<unsigned>(workers, 16);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = static_cast<std::size_t>(w) * chunk;
    if (lo >= n) break;
    const std::size_t hi = std::min(n, lo + chunk);
    pool.emplace_back(fill, lo, hi);
  }
  for (auto& th : pool) th.join();
  return trace;
}

SpectrumTable spectrum(const SignalTrace& trace) {
  if (trace.size() < 2) throw DomainError("spectrum: need at least 2 samples");
  const std::size_t nfft = 4 * detail::next_pow2(trace.size());
  std::vector<std::complex<double>> buf(nfft);
  std::copy(trace.samples.begin(), trace.samples.end(), buf.begin());
  buf = detail::fft(std::move(buf), false);
  SpectrumTable table;
  table.df = 1.0 / (static_cast<double>(nfft) * trace.dt);
  table.freq_hz.resize(nfft);
  table.magnitude.resize(nfft);
  for (std::size_t k = 0; k < nfft; ++k) {
    table.freq_hz[k] = table.df * static_cast<double>(k);
    table.magnitude[k] = std::abs(buf[k]);
  }
  return table;
}

namespace {

double dtft_magnitude(const SignalTrace& trace, double f) {
  // phase recurrence; drift over ~2^21 samples stays far below the
  // golden-section resolution
  const double dphi = -2.0 * M_PI * f * trace.dt;
  const std::complex<double> step = std::polar(1.0, dphi);
  std::complex<double> w{1.0, 0.0};
  std::complex<double> acc{0.0, 0.0};
  for (const auto& s : trace.samples) {
    acc += s * w;
    w *= step;
  }
  return std::abs(acc);
}

}  // namespace

double refine_spectrum_peak(const SignalTrace& trace, double f0, double halfwidth) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = f0 - halfwidth;
  double b = f0 + halfwidth;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = dtft_magnitude(trace, c);
  double fd = dtft_magnitude(trace, d);
  for (int it = 0; it < 64; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = dtft_magnitude(trace, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = dtft_magnitude(trace, d);
    }
  }
  return 0.5 * (a + b);
}

double spectrum_peak_frequency(const SignalTrace& trace) {
  const SpectrumTable table = spectrum(trace);
  const std::size_t k = static_cast<std::size_t>(
      std::max_element(table.magnitude.begin(), table.magnitude.end()) -
      table.magnitude.begin());
  return refine_spectrum_peak(trace, table.freq_hz[k], table.df);
}

SignalTrace matched_filter(const SignalTrace& received, const SignalTrace& reference) {
  if (received.dt != reference.dt) {
    throw DomainError("matched_filter: sample intervals differ");
  }
  if (received.samples.empty() || reference.samples.empty()) {
    throw DomainError("matched_filter: empty trace");
  }
  double norm = 0.0;
  for (const auto& s : reference.samples) norm += std::norm(s);
  if (norm == 0.0) throw DomainError("matched_filter: reference has zero energy");

  const std::size_t n = std::max(received.size(), reference.size());
  std::vector<std::complex<double>> a(n), b(n);
  std::copy(received.samples.begin(), received.samples.end(), a.begin());
  std::copy(reference.samples.begin(), reference.samples.end(), b.begin());

  std::vector<std::complex<double>> r = (2 * n - 1 > 4096)
                                            ? detail::xcorr_fft(a, b)
                                            : detail::xcorr_direct(a, b);
  const double scale = 1.0 / norm;
  for (auto& v : r) v *= scale;

  SignalTrace out;
  out.dt = received.dt;
  out.t_start = (received.t_start - reference.t_start) -
                static_cast<double>(n - 1) * received.dt;
  out.samples = std::move(r);
  return out;
}

PeakMetrics magnitude_peak_metrics(std::span<const double> mag, double x0, double dx) {
  if (mag.empty()) throw DomainError("peak metrics: empty magnitude array");
  const std::size_t peak =
      static_cast<std::size_t>(std::max_element(mag.begin(), mag.end()) - mag.begin());
  PeakMetrics pm;
  pm.peak_index = peak;
  pm.peak_time = x0 + dx * static_cast<double>(peak);
  pm.peak_magnitude = mag[peak];

  const double half = pm.peak_magnitude / std::sqrt(2.0);
  // half-power crossings by linear interpolation between straddling samples
  double left = x0 + dx * static_cast<double>(peak);
  for (std::size_t i = peak; i-- > 0;) {
    if (mag[i] <= half) {
      const double frac = (mag[i + 1] - half) / (mag[i + 1] - mag[i]);
      left = x0 + dx * (static_cast<double>(i + 1) - frac);
      break;
    }
    if (i == 0) left = x0;
  }
  double right = x0 + dx * static_cast<double>(peak);
  for (std::size_t i = peak + 1; i < mag.size(); ++i) {
    if (mag[i] <= half) {
      const double frac = (mag[i - 1] - half) / (mag[i - 1] - mag[i]);
      right = x0 + dx * (static_cast<double>(i - 1) + frac);
      break;
    }
    if (i + 1 == mag.size()) right = x0 + dx * static_cast<double>(i);
  }
  pm.width_3db = std::max(right - left, dx);

  // sidelobe scan outside twice the half-power span around the peak
  double side = 0.0;
  for (std::size_t i = 0; i < mag.size(); ++i) {
    const double x = x0 + dx * static_cast<double>(i);
    if (std::abs(x - pm.peak_time) <= pm.width_3db) continue;
    side = std::max(side, mag[i]);
  }
  pm.pslr_db = side > 0.0 ? 20.0 * std::log10(pm.peak_magnitude / side)
                          : std::numeric_limits<double>::infinity();
  return pm;
}

PeakMetrics peak_metrics(const SignalTrace& trace) {
  if (trace.samples.empty()) throw DomainError("peak_metrics: empty trace");
  std::vector<double> mag(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) mag[i] = std::abs(trace.samples[i]);
  return magnitude_peak_metrics(mag, trace.t_start, trace.dt);
}

}  // namespace echosim
