#pragma once

#include <complex>
#include <optional>

#include "echosim/pipeline.hpp"

namespace echosim {

// Precomputed per-scenario constants of the accelerating-frame fast path.
// Every field is a pure function of MotionParams; recomputing it reproduces
// the stored value exactly.
struct HsuConstants {
  double xintav;  // intercept range, m
  double f1w, f2w, f3w, f4w, f5w, f6w, f7w, f8w, f9w, f10w, f11w;
  double f19w;  // sqrt((1 + f8w)(1 - f8w))
};

// Observation-time-dependent terms of the accelerating-frame constant set.
struct HsuTimeTerms {
  double f12w, f13w, f14w, f15w, f16w, f17w, f18w;
};

// Precomputed constants of the constant-velocity fast path.
struct LorentzConstants {
  double xintxv;  // intercept range, m
  double f1l, f2l, f3l, f4l, f5l, f6l, f7l, f8l, f9l;
};

HsuConstants hsu_constants(const MotionParams& m);
LorentzConstants lorentz_constants(const MotionParams& m);
HsuTimeTerms hsu_time_terms(const HsuConstants& k, const MotionParams& m, double t_obs);

// Closed-form emission times; algebraically equal to the pipeline
// composition and grouped so that no term divides by alpha0.
double hsu_retarded_time(const HsuConstants& k, const MotionParams& m, double t_obs);
double lorentz_retarded_time(const LorentzConstants& k, const MotionParams& m,
                             double t_obs);
double galilean_retarded_time(double c4, const MotionParams& m, double t_obs);

// The two legacy groupings of the accelerating-frame bracket, kept only so
// the verify report can show how far each drifts from the composition.
// nullopt means a radicand went negative at this t_obs.
struct HsuBracketProbe {
  std::optional<double> f14_scaled;    // f14w slot carrying the c^2-scaled radical term
  std::optional<double> f14_unscaled;  // f14w slot matching the f13w radical term
};
HsuBracketProbe hsu_bracket_probe(const HsuConstants& k, const MotionParams& m,
                                  double t_obs);

// Fast-path evaluator: constants are computed once, then each call is a
// single closed-form bracket plus one waveform evaluation.
class ReceivedClosed {
 public:
  ReceivedClosed(TransformKind kind, WaveformSpec spec, MotionParams motion);

  std::complex<double> operator()(double t_obs) const;
  double retarded_time(double t_obs) const;

  TransformKind kind() const { return kind_; }
  const WaveformSpec& spec() const { return spec_; }

 private:
  TransformKind kind_;
  WaveformSpec spec_;
  MotionParams motion_;
  HsuConstants hsu_{};
  LorentzConstants lor_{};
  double c4_ = 0.0;
};

std::complex<double> received_closed(TransformKind kind, const WaveformSpec& spec,
                                     const MotionParams& m, double t_obs);

}  // namespace echosim
