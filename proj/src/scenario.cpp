#include "echosim/scenario.hpp"

#include <memory>

namespace echosim {

std::function<std::complex<double>(double)> received_evaluator(TransformKind kind,
                                                               const WaveformSpec& spec,
                                                               const MotionParams& m) {
  TransformKind effective = kind;
  if (kind == TransformKind::Hsu && m.alpha0 == 0.0) {
    effective = TransformKind::Lorentz;  // alpha0 -> 0 limit of the map
  }
  auto eval = std::make_shared<ReceivedClosed>(effective, spec, m);
  return [eval](double t_obs) { return (*eval)(t_obs); };
}

SignalTrace simulate_received(const ScenarioConfig& cfg) {
  return simulate_received(cfg, cfg.transform);
}

SignalTrace simulate_received(const ScenarioConfig& cfg, TransformKind kind) {
  const auto fn = received_evaluator(kind, cfg.make_waveform(), cfg.make_motion());
  return sample_received(fn, cfg.t_start, cfg.dt, cfg.n_samples);
}

}  // namespace echosim
