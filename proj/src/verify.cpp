#include "echosim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include "echosim/closed_form.hpp"
#include "echosim/scenario.hpp"

namespace echosim {

bool VerifyReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const VerifyEntry& e) { return e.pass; });
}

namespace {

// tau is monotone increasing in t_obs for every kind handled here; bisect
// tau(t) = target inside [lo, hi].
double bisect_tau(const ReceivedClosed& rc, double target, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (rc.retarded_time(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<std::pair<std::string, WaveformSpec>> waveform_set(const ScenarioConfig& cfg) {
  std::vector<std::pair<std::string, WaveformSpec>> specs;
  for (const char* name : {"sine", "chirp", "hyperbolic", "barker", "gaussian"}) {
    ScenarioConfig c = cfg;
    c.waveform = name;
    specs.emplace_back(name, c.make_waveform());
  }
  return specs;
}

}  // namespace

VerifyReport run_verify(const ScenarioConfig& cfg, std::size_t n_points,
                        double tolerance, std::uint64_t sample_seed) {
  VerifyReport report;
  const MotionParams motion = cfg.make_motion();
  const auto specs = waveform_set(cfg);
  const std::vector<TransformKind> kinds{TransformKind::Reference, TransformKind::Lorentz,
                                         TransformKind::Galilean, TransformKind::Hsu};

  std::vector<double> hsu_points;  // kept for the constant-set probes

  for (const TransformKind kind : kinds) {
    TransformKind effective = kind;
    if (kind == TransformKind::Hsu && motion.alpha0 == 0.0) {
      effective = TransformKind::Lorentz;
    }
    for (const auto& [name, spec] : specs) {
      const ReceivedClosed closed(effective, spec, motion);
      const PipelineScenario pipe(effective, spec, motion);
      // echo support: tau in [0, pw); tau(0) = -2 x0/c < 0 and tau grows
      // about linearly, so this bracket always straddles both crossings
      const double hi = 4.0 * motion.x0 / motion.c + 4.0 * spec.pw;
      const double t_lo = bisect_tau(closed, 0.0, 0.0, hi);
      const double t_hi = bisect_tau(closed, spec.pw, 0.0, hi);
      std::mt19937_64 rng(sample_seed);
      std::uniform_real_distribution<double> dist(t_lo, t_hi);
      double max_dev = 0.0;
      for (std::size_t i = 0; i < n_points; ++i) {
        const double t = dist(rng);
        const double dev = std::abs(received_pipeline(pipe, t) - closed(t));
        max_dev = std::max(max_dev, dev);
        if (effective == TransformKind::Hsu && spec.family == WaveformFamily::Sine) {
          hsu_points.push_back(t);
        }
      }
      report.entries.push_back({kind, name, max_dev, tolerance, max_dev <= tolerance});
    }
  }

  if (!hsu_points.empty()) {
    const HsuConstants k = hsu_constants(motion);
    WaveformSpec sine;
    sine.family = WaveformFamily::Sine;
    sine.fc = cfg.fc;
    sine.pw = cfg.pw;
    const PipelineScenario pipe(TransformKind::Hsu, sine, motion);
    BracketProbeSummary scaled{"f14w slot: c^2-scaled radical variant", true, 0.0};
    BracketProbeSummary unscaled{"f14w slot: f13w radical variant", true, 0.0};
    for (const double t : hsu_points) {
      const double u = pipe.retarded_time(t);
      const HsuBracketProbe probe = hsu_bracket_probe(k, motion, t);
      if (probe.f14_scaled) {
        scaled.max_dev_seconds = std::max(scaled.max_dev_seconds, std::abs(*probe.f14_scaled - u));
      } else {
        scaled.evaluable = false;
      }
      if (probe.f14_unscaled) {
        unscaled.max_dev_seconds =
            std::max(unscaled.max_dev_seconds, std::abs(*probe.f14_unscaled - u));
      } else {
        unscaled.evaluable = false;
      }
    }
    report.probes.push_back(scaled);
    report.probes.push_back(unscaled);
  }

  return report;
}

void print_verify_report(std::ostream& os, const VerifyReport& report) {
  os << "oracle equivalence: received_pipeline vs received_closed\n";
  for (const auto& e : report.entries) {
    os << "  " << std::left << std::setw(10) << to_string(e.kind) << " x " << std::setw(11)
       << e.waveform << " max_abs_dev = " << std::scientific << std::setprecision(3)
       << e.max_abs_dev << "  tol = " << e.tolerance << "  "
       << (e.pass ? "PASS" : "FAIL") << '\n';
  }
  if (!report.probes.empty()) {
    os << "constant-set bracket diagnostics (fast path ships the exact composition"
          " bracket; f10l is reconstructed from the inverse boost):\n";
    for (const auto& p : report.probes) {
      os << "  " << p.name << ": ";
      if (!p.evaluable) {
        os << "not evaluable (negative radicand on the echo support)";
      } else {
        os << "max |dtau| = " << std::scientific << std::setprecision(3)
           << p.max_dev_seconds << " s";
        os << (p.max_dev_seconds > 1e-12 ? " -> does not match the pipeline" : " -> matches");
      }
      os << '\n';
    }
  }
  os << "verify result: " << (report.all_pass() ? "PASS" : "FAIL") << '\n';
}

}  // namespace echosim
