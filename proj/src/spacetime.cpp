#include "echosim/spacetime.hpp"

#include <cmath>

namespace echosim {

double MotionParams::f2() const {
  const double b = f1();
  return std::sqrt(1.0 - b * b);
}

void MotionParams::validate() const {
  if (!(c > 0.0)) {
    throw DomainError("MotionParams: c must be positive");
  }
  if (!(std::abs(v0) < c)) {
    throw DomainError("MotionParams: |v0| must be < c");
  }
}

std::string to_string(TransformKind kind) {
  switch (kind) {
    case TransformKind::Hsu: return "hsu";
    case TransformKind::Lorentz: return "lorentz";
    case TransformKind::Galilean: return "galilean";
    case TransformKind::Reference: return "reference";
    case TransformKind::Classical: return "classical";
  }
  return "?";
}

TransformKind transform_from_string(const std::string& name) {
  if (name == "hsu") return TransformKind::Hsu;
  if (name == "lorentz") return TransformKind::Lorentz;
  if (name == "galilean") return TransformKind::Galilean;
  if (name == "reference") return TransformKind::Reference;
  if (name == "classical") return TransformKind::Classical;
  throw ConfigError("unknown transform '" + name + "'");
}

bool hsu_domain(const SpacetimeEvent& e, const MotionParams& m) {
  return std::abs(m.f1() + m.f3() * e.t) < 1.0;
}

namespace {

void require_hsu_usable(const MotionParams& m) {
  m.validate();
  if (m.alpha0 == 0.0) {
    throw DegenerateError("alpha0 = 0 has no accelerating-frame map; use the Lorentz limit");
  }
}

}  // namespace

SpacetimeEvent hsu_forward(const SpacetimeEvent& e, const MotionParams& m) {
  require_hsu_usable(m);
  if (!hsu_domain(e, m)) {
    throw DomainError("hsu_forward: |f1 + f3*t| >= 1");
  }
  const double f1 = m.f1();
  const double f2 = m.f2();
  const double f3 = m.f3();
  const double p = f1 + f3 * e.t;
  const double f = std::sqrt(1.0 - p * p);
  // Grouped so that nothing divides by alpha0: the f2 - f difference is
  // expanded through f2^2 - f^2 = f3*t*(2*f1 + f3*t).
  const double q = 2.0 * f1 + f3 * e.t;
  const double tp = (f2 * e.t / f) * (f1 * q / (f2 + f) + f2) - p * e.x / (m.c * f);
  const double xp = e.x / f - m.c * f2 * e.t * q / (f * (f2 + f));
  return {tp, xp};
}

SpacetimeEvent hsu_inverse(const SpacetimeEvent& e_prime, const MotionParams& m) {
  require_hsu_usable(m);
  const double f1 = m.f1();
  const double f2 = m.f2();
  const double f3 = m.f3();
  const double den = m.c * f2 - f3 * e_prime.x;
  if (den == 0.0) {
    throw DomainError("hsu_inverse: zero denominator");
  }
  const double t = (m.c * e_prime.t + f1 * e_prime.x) / den;
  const double p = f1 + f3 * t;
  const double rad = 1.0 - p * p;
  if (!(rad > 0.0)) {
    throw DomainError("hsu_inverse: negative radicand");
  }
  const double f = std::sqrt(rad);
  const double q = 2.0 * f1 + f3 * t;
  const double x = f * e_prime.x + m.c * f2 * t * q / (f2 + f);
  return {t, x};
}

SpacetimeEvent lorentz_forward(const SpacetimeEvent& e, const MotionParams& m) {
  m.validate();
  const double f2 = m.f2();
  const double tp = e.t / f2 - m.v0 * e.x / (m.c * m.c * f2);
  const double xp = -e.t * m.v0 / f2 + e.x / f2;
  return {tp, xp};
}

SpacetimeEvent lorentz_inverse(const SpacetimeEvent& e_prime, const MotionParams& m) {
  m.validate();
  const double f2 = m.f2();
  const double t = e_prime.t / f2 + m.v0 * e_prime.x / (m.c * m.c * f2);
  const double x = e_prime.t * m.v0 / f2 + e_prime.x / f2;
  return {t, x};
}

SpacetimeEvent galilean_forward(const SpacetimeEvent& e, const MotionParams& m) {
  return {e.t, -0.5 * m.alpha0 * e.t * e.t - e.t * m.v0 + e.x};
}

SpacetimeEvent galilean_inverse(const SpacetimeEvent& e_prime, const MotionParams& m) {
  return {e_prime.t, 0.5 * m.alpha0 * e_prime.t * e_prime.t + e_prime.t * m.v0 + e_prime.x};
}

SpacetimeEvent reference_transform(const SpacetimeEvent& e, const MotionParams&) {
  return e;
}

double classical_retarded_time(double t, const MotionParams& m) {
  return t * (1.0 - 2.0 * m.v0 / m.c - m.alpha0 * t / m.c) - 2.0 * m.x0 / m.c;
}

}  // namespace echosim
