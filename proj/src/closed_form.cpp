#include "echosim/closed_form.hpp"

#include <cmath>
#include <utility>

namespace echosim {

HsuConstants hsu_constants(const MotionParams& m) {
  m.validate();
  if (m.alpha0 == 0.0) {
    throw DegenerateError("hsu_constants: alpha0 = 0; use the Lorentz constants");
  }
  const double c = m.c;
  const double f1 = m.f1();
  const double f2 = m.f2();
  const double f3 = m.f3();
  const double c4 = intercept_range(TransformKind::Hsu, m);
  HsuConstants k;
  k.xintav = c4;
  k.f1w = f2;
  k.f2w = -k.f1w * f1 * c4;
  k.f3w = -f1 * f3 * c4 * c4 / c;
  k.f4w = -f2 * f2 + f3 * f3 * c4 * c4 / (c * c);
  k.f5w = f2 * f2;
  k.f6w = -k.f1w * m.v0 / f3;
  k.f7w = c * k.f1w / f3;
  k.f8w = f1;
  k.f9w = c * c * k.f5w;
  k.f10w = k.f7w - c4;
  k.f11w = m.alpha0 * c4;
  k.f19w = std::sqrt((1.0 + k.f8w) * (1.0 - k.f8w));
  return k;
}

LorentzConstants lorentz_constants(const MotionParams& m) {
  m.validate();
  const double c = m.c;
  const double f1 = m.f1();
  const double f2 = m.f2();
  LorentzConstants k;
  k.xintxv = c * m.x0 / (c - m.v0);
  k.f1l = f2;
  k.f2l = k.f1l * m.v0 * k.xintxv / (c * c - m.v0 * m.v0);
  k.f3l = c * c * k.f1l * k.xintxv / (c * c - m.v0 * m.v0);
  k.f4l = c * c - m.v0 * m.v0;
  k.f5l = c * c * k.f1l * m.v0;
  k.f6l = c * c * k.f1l;
  k.f7l = k.f1l * k.f1l;
  k.f8l = f1 * f1;
  k.f9l = k.f8l / k.f7l;
  return k;
}

HsuTimeTerms hsu_time_terms(const HsuConstants& k, const MotionParams& m, double t_obs) {
  const double c = m.c;
  const double f3 = m.f3();
  const double a0 = m.alpha0;
  const double p = k.f8w + f3 * t_obs;
  const double rad = 1.0 - p * p;
  if (!(rad > 0.0)) {
    throw DomainError("hsu_time_terms: negative radicand at t_obs");
  }
  const double fa = std::sqrt(rad);
  HsuTimeTerms t;
  t.f12w = k.f7w - k.f9w / (a0 * fa);
  t.f13w = -k.f8w - (f3 / c) * (k.f6w - c * c * k.f5w * p / (a0 * fa));
  // The c^2-scaled f14w variant has |f14w| >> 1 and no real radical; the
  // evaluable slot repeats the f13w radical term.
  t.f14w = t.f13w;
  const double r13 = 1.0 - t.f13w * t.f13w;
  const double r14 = 1.0 - t.f14w * t.f14w;
  if (!(r13 > 0.0) || !(r14 > 0.0)) {
    throw DomainError("hsu_time_terms: negative radicand in f13w/f14w");
  }
  const double s13 = std::sqrt(r13);
  const double s14 = std::sqrt(r14);
  t.f15w = (k.f10w + t.f12w / s14 - k.f9w / (a0 * s13) + t.f12w * t.f14w / s14 +
            k.f6w - t.f13w * k.f9w / (a0 * s13)) /
           c;
  t.f17w = (-k.f11w * t.f15w / c - c * t.f15w * k.f1w + k.f2w + k.f3w) / (c * k.f4w);
  t.f16w = f3 * t.f17w;
  const double r18 = (1.0 + t.f16w + k.f8w) * (1.0 - t.f16w - k.f8w);
  if (!(r18 > 0.0)) {
    throw DomainError("hsu_time_terms: negative radicand in f18w");
  }
  t.f18w = std::sqrt(r18);
  return t;
}

double hsu_retarded_time(const HsuConstants& k, const MotionParams& m, double t_obs) {
  const double c = m.c;
  const double f1 = m.f1();
  const double f2 = m.f2();
  const double f3 = m.f3();
  // Receiver-axis image in the unprimed frame: t = t_obs / f2 and
  // x = (c^2 f2 / alpha0)(f2 - F) with the difference expanded exactly so
  // alpha0 cancels.
  const double tg = t_obs / f2;
  const double pg = f1 + f3 * tg;
  if (!(std::abs(pg) < 1.0)) {
    throw DomainError("hsu_retarded_time: receiver image outside the map domain");
  }
  const double fg = std::sqrt(1.0 - pg * pg);
  const double xg = c * f2 * tg * (2.0 * f1 + f3 * tg) / (f2 + fg);
  const double tr = (tg - k.xintav / c) + xg / c;
  const double p = f1 + f3 * tr;
  if (!(std::abs(p) < 1.0)) {
    throw DomainError("hsu_retarded_time: reflection time outside the map domain");
  }
  const double fr = std::sqrt(1.0 - p * p);
  // Emission bracket u = -(1+f1) x /(c f2) + (D(p) - D(f1)) (c f2^2/alpha0 - x/c)
  // with D(p) = sqrt((1+p)/(1-p)); the difference of the two D values is
  // expanded exactly through D^2(p) - D^2(f1) = 2 f3 tr / ((1-p)(1-f1)).
  const double d = (1.0 + p) / fr;
  const double d0 = (1.0 + f1) / f2;
  return -(1.0 + f1) * k.xintav / (c * f2) +
         2.0 * tr * (f2 * f2 - f3 * k.xintav / c) /
             ((1.0 - p) * (1.0 - f1) * (d + d0));
}

double lorentz_retarded_time(const LorentzConstants& k, const MotionParams& m,
                             double t_obs) {
  const double c = m.c;
  const double f1 = m.f1();
  const double f2 = m.f2();
  const double tr = t_obs * (1.0 + f1) / f2 - k.xintxv / c;
  // f10l: return-leg time mapped back through the inverse boost; the legacy
  // f17l/f19l grouping is undefined, so the term is reconstructed from the
  // composition it stands for.
  const double f10l = k.xintxv / c + (tr - k.xintxv / c) * (1.0 + f1) / (1.0 - f1);
  return k.f2l + k.f6l * f10l / k.f4l - (k.f3l + k.f5l * f10l / k.f4l) / c;
}

double galilean_retarded_time(double c4, const MotionParams& m, double t_obs) {
  const auto rho = [&](double s) {
    return (s - c4 / m.c) + (m.v0 * s + 0.5 * m.alpha0 * s * s) / m.c;
  };
  return rho(rho(t_obs));
}

HsuBracketProbe hsu_bracket_probe(const HsuConstants& k, const MotionParams& m,
                                  double t_obs) {
  const double c = m.c;
  const double f3 = m.f3();
  const double a0 = m.alpha0;
  HsuBracketProbe probe;
  const double p = k.f8w + f3 * t_obs;
  const double rad = 1.0 - p * p;
  if (!(rad > 0.0)) return probe;
  const double fa = std::sqrt(rad);
  const double f12w = k.f7w - k.f9w / (a0 * fa);
  const double f13w = -k.f8w - (f3 / c) * (k.f6w - c * c * k.f5w * p / (a0 * fa));

  const auto finish = [&](double f14w) -> std::optional<double> {
    const double r13 = 1.0 - f13w * f13w;
    const double r14 = 1.0 - f14w * f14w;
    if (!(r13 > 0.0) || !(r14 > 0.0)) return std::nullopt;
    const double s13 = std::sqrt(r13);
    const double s14 = std::sqrt(r14);
    const double f15w = (k.f10w + f12w / s14 - k.f9w / (a0 * s13) +
                         f12w * f14w / s14 + k.f6w - f13w * k.f9w / (a0 * s13)) /
                        c;
    const double f17w =
        (-k.f11w * f15w / c - c * f15w * k.f1w + k.f2w + k.f3w) / (c * k.f4w);
    const double f16w = f3 * f17w;
    const double r18 = (1.0 + f16w + k.f8w) * (1.0 - f16w - k.f8w);
    if (!(r18 > 0.0)) return std::nullopt;
    const double f18w = std::sqrt(r18);
    return f17w - (c * c / a0 - c * c * k.f19w * f18w / a0 - m.v0 * m.v0 / a0 -
                   f18w * k.xintav) /
                      c;
  };

  const double f14w_scaled =
      -k.f8w - (f3 / c) * (k.f6w - c * c * k.f9w * p / (a0 * fa));
  probe.f14_scaled = finish(f14w_scaled);
  probe.f14_unscaled = finish(f13w);
  return probe;
}

ReceivedClosed::ReceivedClosed(TransformKind kind, WaveformSpec spec, MotionParams motion)
    : kind_(kind), spec_(std::move(spec)), motion_(motion) {
  motion_.validate();
  spec_.validate();
  switch (kind_) {
    case TransformKind::Hsu:
      hsu_ = hsu_constants(motion_);
      c4_ = hsu_.xintav;
      break;
    case TransformKind::Lorentz:
      lor_ = lorentz_constants(motion_);
      c4_ = lor_.xintxv;
      break;
    case TransformKind::Galilean:
      c4_ = intercept_range(TransformKind::Galilean, motion_);
      break;
    case TransformKind::Reference:
      c4_ = motion_.x0;
      break;
    case TransformKind::Classical:
      break;  // pure time rescaling; no intercept geometry
  }
}

double ReceivedClosed::retarded_time(double t_obs) const {
  switch (kind_) {
    case TransformKind::Hsu: return hsu_retarded_time(hsu_, motion_, t_obs);
    case TransformKind::Lorentz: return lorentz_retarded_time(lor_, motion_, t_obs);
    case TransformKind::Galilean: return galilean_retarded_time(c4_, motion_, t_obs);
    case TransformKind::Reference: return t_obs - 2.0 * motion_.x0 / motion_.c;
    case TransformKind::Classical: return classical_retarded_time(t_obs, motion_);
  }
  throw DomainError("ReceivedClosed: unknown kind");
}

std::complex<double> ReceivedClosed::operator()(double t_obs) const {
  return eval_reference(spec_, retarded_time(t_obs));
}

std::complex<double> received_closed(TransformKind kind, const WaveformSpec& spec,
                                     const MotionParams& m, double t_obs) {
  return ReceivedClosed(kind, spec, m)(t_obs);
}

}  // namespace echosim
