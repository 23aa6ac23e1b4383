#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "echosim/waveform.hpp"
#include "test_util.hpp"

using namespace echosim;
using test::rel_err;

namespace {

WaveformSpec sine_spec() {
  WaveformSpec s;
  s.family = WaveformFamily::Sine;
  s.fc = 3.0e8;
  s.pw = 1.0e-4;
  return s;
}

WaveformSpec chirp_spec() {
  WaveformSpec s;
  s.family = WaveformFamily::Chirp;
  s.fc = 3.0e8;
  s.pw = 1.0e-4;
  s.slope = 7.5e11;
  return s;
}

WaveformSpec hyp_spec(double b = -0.0000111108) {
  WaveformSpec s;
  s.family = WaveformFamily::Hyperbolic;
  s.fc = 3.0e8;
  s.pw = 1.0e-4;
  s.b = b;
  return s;
}

WaveformSpec coded_spec(std::vector<double> codes) {
  WaveformSpec s;
  s.family = WaveformFamily::Coded;
  s.fc = 3.0e8;
  s.pw = 1.0e-4;
  s.codes = std::move(codes);
  return s;
}

}  // namespace

TEST_CASE("heaviside convention") {
  CHECK(heaviside(-1.0) == 0.0);
  CHECK(heaviside(0.0) == 1.0);
  CHECK(heaviside(1e-9) == 1.0);
}

TEST_CASE("pulsed sine values") {
  const WaveformSpec s = sine_spec();
  CHECK(eval_reference(s, 0.0) == std::complex<double>(1.0, 0.0));
  CHECK(eval_reference(s, s.pw) == std::complex<double>(0.0, 0.0));
  // phase 2 pi fc t = 1.5 pi
  const std::complex<double> v = eval_reference(s, 2.5e-9);
  CHECK(std::abs(v - std::complex<double>(0.0, -1.0)) < 1e-12);
}

TEST_CASE("hyperbolic b -> 0 approaches the plain carrier") {
  const WaveformSpec h = hyp_spec(1e-12);
  for (const double t : {1e-7, 5e-7, 1e-6}) {
    const std::complex<double> carrier = std::polar(1.0, -2.0 * M_PI * h.fc * t);
    CHECK(std::abs(eval_reference(h, t) - carrier) < 1e-6);
  }
}

TEST_CASE("hyperbolic branch error inside the gate") {
  // b chosen so 1 + b fc t crosses zero inside [0, pw)
  WaveformSpec h = hyp_spec(-1.0 / (3.0e8 * 0.5e-4));
  CHECK_THROWS_AS(h.validate(), DomainError);
  CHECK_THROWS_AS(eval_reference(h, 0.9e-4), DomainError);
  CHECK(eval_reference(h, -1.0) == std::complex<double>(0.0, 0.0));  // gate closed
}

TEST_CASE("barker sequence") {
  const auto bc = barker13();
  CHECK(bc.size() == 13);
  CHECK(bc[5] == -1.0);  // element 6, 1-based
  double sum = 0.0;
  for (const double v : bc) sum += v;
  CHECK(sum == 5.0);
}

TEST_CASE("gaussian codes are deterministic") {
  const auto a = gaussian_codes(1, 13);
  const auto b = gaussian_codes(1, 13);
  CHECK(a == b);
  CHECK(a.size() == 13);
  CHECK(gaussian_codes(2, 13) != a);
  // frozen spot checks pin the generator definition
  CHECK(rel_err(a[0], -0.028249746095854695) < 1e-9);
  CHECK(rel_err(a[1], -0.22791952286763517) < 1e-9);
  CHECK(rel_err(a[2], 0.10309095168573973) < 1e-9);
}

TEST_CASE("gaussian codes law of large numbers") {
  const std::size_t n = 1000000;
  const auto z = gaussian_codes(20250809, n);
  double mean = 0.0;
  for (const double v : z) mean += v;
  mean /= static_cast<double>(n);
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("unit modulus and support") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> t_dist(-2e-4, 3e-4);
  const WaveformSpec specs[] = {sine_spec(), chirp_spec(), hyp_spec()};
  for (const auto& s : specs) {
    for (int i = 0; i < 2000; ++i) {
      const double t = t_dist(rng);
      const double mag = std::abs(eval_reference(s, t));
      if (t < 0.0 || t >= s.pw) {
        CHECK(mag == 0.0);
      } else {
        CHECK(std::abs(mag - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("coded sub-pulses tile the gate") {
  const auto codes = barker13();
  const WaveformSpec s = coded_spec(codes);
  const double seg = s.dtseg();
  CHECK(seg == s.pw / 13.0);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> t_dist(0.0, s.pw);
  for (int i = 0; i < 2000; ++i) {
    const double t = t_dist(rng);
    const auto idx = static_cast<std::size_t>(std::min(12.0, std::floor(t / seg)));
    const std::complex<double> expect =
        codes[idx] * std::polar(1.0, -2.0 * M_PI * s.fc * t);
    CHECK(std::abs(eval_reference(s, t) - expect) < 1e-12);
  }
  // exact edges belong to the opening sub-pulse
  for (std::size_t i = 0; i < 13; ++i) {
    const double t = static_cast<double>(i) * seg;
    const std::complex<double> expect =
        codes[i] * std::polar(1.0, -2.0 * M_PI * s.fc * t);
    CHECK(std::abs(eval_reference(s, t) - expect) < 1e-12);
  }
  CHECK(eval_reference(s, s.pw) == std::complex<double>(0.0, 0.0));
  CHECK(eval_reference(s, -1e-12) == std::complex<double>(0.0, 0.0));
}

TEST_CASE("chirp instantaneous frequency") {
  const WaveformSpec s = chirp_spec();
  const double h = 1e-10;
  for (const double t : {1e-5, 5e-5, 9e-5}) {
    const std::complex<double> a = eval_reference(s, t - h);
    const std::complex<double> b = eval_reference(s, t + h);
    const double dphi = std::arg(b / a);  // |dphi| < pi for this h
    const double f_inst = dphi / (2.0 * M_PI * 2.0 * h);
    const double expect = -(s.fc + 2.0 * s.slope * t);
    CHECK(rel_err(f_inst, expect) < 1e-3);
  }
}
