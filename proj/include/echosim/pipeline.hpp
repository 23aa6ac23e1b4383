#pragma once

#include <complex>

#include "echosim/spacetime.hpp"
#include "echosim/waveform.hpp"

namespace echosim {

// Fixed coordinate at which the outgoing wavefront meets the target
// worldline x(t) = x0 + v0 t + alpha0 t^2 / 2 (alpha0 dropped for Lorentz,
// both dropped for Reference). Throws NoInterceptError when the wavefront
// never catches the target.
double intercept_range(TransformKind kind, const MotionParams& m);

// Generic transformation -> propagation -> reflection -> back-transformation
// composition. Every sample walks the full chain through the coordinate
// maps; this is the ground truth the closed forms are validated against.
// Classical has no spatial map and is rejected.
class PipelineScenario {
 public:
  PipelineScenario(TransformKind transform, WaveformSpec spec, MotionParams motion);
  PipelineScenario(TransformKind transform, WaveformSpec spec, MotionParams motion,
                   double cp);

  TransformKind transform() const { return transform_; }
  const WaveformSpec& spec() const { return spec_; }
  const MotionParams& motion() const { return motion_; }
  double cp() const { return cp_; }
  double intercept() const { return c4_; }

  // Emission-time argument handed to the transmitted waveform for an
  // observation at t_obs on the receiver axis.
  double retarded_time(double t_obs) const;

 private:
  TransformKind transform_;
  WaveformSpec spec_;
  MotionParams motion_;
  double cp_;
  double c4_;  // cached intercept
};

std::complex<double> received_pipeline(const PipelineScenario& s, double t_obs);

}  // namespace echosim
