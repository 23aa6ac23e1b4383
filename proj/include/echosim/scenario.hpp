#pragma once

#include <complex>
#include <functional>

#include "echosim/analysis.hpp"
#include "echosim/closed_form.hpp"
#include "echosim/config.hpp"

namespace echosim {

// Closed-form received-signal evaluator for one transformation kind.
// The accelerating-frame kind with alpha0 = 0 is routed to its
// zero-acceleration limit (the Lorentz map).
std::function<std::complex<double>(double)> received_evaluator(TransformKind kind,
                                                               const WaveformSpec& spec,
                                                               const MotionParams& m);

SignalTrace simulate_received(const ScenarioConfig& cfg);
SignalTrace simulate_received(const ScenarioConfig& cfg, TransformKind kind);

}  // namespace echosim
