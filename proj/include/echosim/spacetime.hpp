#pragma once

#include <string>

#include "echosim/errors.hpp"

namespace echosim {

inline constexpr double kDefaultC = 3.0e8;  // m/s

// Target kinematics plus the propagation speed shared by every map.
// c is a parameter (not a constant) so the c -> infinity limit can be
// exercised numerically.
struct MotionParams {
  double v0 = 0.0;       // initial velocity, m/s
  double alpha0 = 0.0;   // constant acceleration, m/s^2
  double x0 = 0.0;       // initial target range, m
  double c = kDefaultC;  // propagation speed, m/s

  double f1() const { return v0 / c; }
  double f2() const;  // sqrt(1 - f1^2)
  double f3() const { return alpha0 / c; }

  // Throws DomainError unless c > 0 and |v0| < c.
  void validate() const;
};

// One (t, x) coordinate pair; the frame is implied by context.
struct SpacetimeEvent {
  double t = 0.0;  // s
  double x = 0.0;  // m
};

enum class TransformKind { Hsu, Lorentz, Galilean, Reference, Classical };

std::string to_string(TransformKind kind);
TransformKind transform_from_string(const std::string& name);

// True iff |f1 + f3*t| < 1, i.e. the accelerating-frame radical is real.
bool hsu_domain(const SpacetimeEvent& e, const MotionParams& m);

// Inertial <-> linearly-accelerating frame map and its inverse.
// alpha0 = 0 is a hard DegenerateError; use lorentz_forward for that limit.
SpacetimeEvent hsu_forward(const SpacetimeEvent& e, const MotionParams& m);
SpacetimeEvent hsu_inverse(const SpacetimeEvent& e_prime, const MotionParams& m);

// Constant-velocity boost and its inverse; alpha0 is ignored.
SpacetimeEvent lorentz_forward(const SpacetimeEvent& e, const MotionParams& m);
SpacetimeEvent lorentz_inverse(const SpacetimeEvent& e_prime, const MotionParams& m);

SpacetimeEvent galilean_forward(const SpacetimeEvent& e, const MotionParams& m);
SpacetimeEvent galilean_inverse(const SpacetimeEvent& e_prime, const MotionParams& m);

// Identity map.
SpacetimeEvent reference_transform(const SpacetimeEvent& e, const MotionParams& m);

// Conventional radar model: t(1 - 2 v0/c - alpha0 t/c) - 2 x0/c. There is
// no spatial map for this kind; it only rescales the waveform argument.
double classical_retarded_time(double t, const MotionParams& m);

}  // namespace echosim
