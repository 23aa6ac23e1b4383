#include "echosim/pipeline.hpp"

#include <cmath>
#include <utility>

namespace echosim {

double intercept_range(TransformKind kind, const MotionParams& m) {
  m.validate();
  if (kind == TransformKind::Classical) {
    throw DomainError("intercept_range: the classical kind has no spatial map");
  }
  if (kind == TransformKind::Reference) {
    return m.x0;
  }
  if (kind == TransformKind::Lorentz) {
    return m.c * m.x0 / (m.c - m.v0);
  }
  const double a = m.alpha0;
  // Smaller-positive root of x = x0 + v0 x/c + (a/2)(x/c)^2 written in the
  // cancellation-free form 2 x0 / (B + sqrt(B^2 - 2 a x0 / c^2)); equal to
  // the radical form -c(-c + v0 + sqrt(c^2 - 2 c v0 + v0^2 - 2 a x0))/a and
  // finite at a = 0, where it degenerates to c x0 / (c - v0).
  const double bq = 1.0 - m.v0 / m.c;
  const double disc = bq * bq - 2.0 * a * m.x0 / (m.c * m.c);
  if (disc < 0.0) {
    throw NoInterceptError("intercept_range: wavefront never reaches the target");
  }
  const double root = 2.0 * m.x0 / (bq + std::sqrt(disc));
  if (!(root > 0.0)) {
    throw NoInterceptError("intercept_range: no positive-range intercept");
  }
  return root;
}

PipelineScenario::PipelineScenario(TransformKind transform, WaveformSpec spec,
                                   MotionParams motion)
    : PipelineScenario(transform, std::move(spec), motion, motion.c) {}

PipelineScenario::PipelineScenario(TransformKind transform, WaveformSpec spec,
                                   MotionParams motion, double cp)
    : transform_(transform), spec_(std::move(spec)), motion_(motion), cp_(cp) {
  motion_.validate();
  spec_.validate();
  if (transform_ == TransformKind::Classical) {
    throw DomainError("PipelineScenario: the classical kind bypasses the pipeline");
  }
  if (cp_ != motion_.c) {
    throw DomainError("PipelineScenario: cp must equal the map propagation speed c");
  }
  c4_ = intercept_range(transform_, motion_);
}

double PipelineScenario::retarded_time(double t_obs) const {
  // Reception event on the receiver axis, mapped into the unprimed frame.
  const SpacetimeEvent rx{t_obs, 0.0};
  SpacetimeEvent g;
  switch (transform_) {
    case TransformKind::Hsu: g = hsu_inverse(rx, motion_); break;
    case TransformKind::Lorentz: g = lorentz_inverse(rx, motion_); break;
    case TransformKind::Galilean: g = galilean_inverse(rx, motion_); break;
    case TransformKind::Reference: g = rx; break;
    case TransformKind::Classical: throw DomainError("classical kind in pipeline");
  }
  // Reflection leg: the return wave observed at (g.t, g.x) left the target
  // at x = c4 a flight time (c4 - x)/cp earlier.
  const double tr = (g.t - c4_ / cp_) + g.x / cp_;
  // Outgoing leg: waveform argument of the wave incident on x = c4.
  const SpacetimeEvent target{tr, c4_};
  SpacetimeEvent h;
  switch (transform_) {
    case TransformKind::Hsu: h = hsu_forward(target, motion_); break;
    case TransformKind::Lorentz: h = lorentz_forward(target, motion_); break;
    case TransformKind::Galilean: h = galilean_forward(target, motion_); break;
    case TransformKind::Reference: h = target; break;
    case TransformKind::Classical: throw DomainError("classical kind in pipeline");
  }
  return h.t - h.x / cp_;
}

std::complex<double> received_pipeline(const PipelineScenario& s, double t_obs) {
  return eval_reference(s.spec(), s.retarded_time(t_obs));
}

}  // namespace echosim
