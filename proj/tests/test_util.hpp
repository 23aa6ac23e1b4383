#pragma once

#include <cmath>

#include "echosim/spacetime.hpp"

namespace echosim::test {

// Benchmark scenario shared by most tests.
inline MotionParams bench_motion() {
  return MotionParams{15625.0, 2.0e8, 6000.18, 3.0e8};
}

inline double rel_err(double got, double want) {
  if (want == 0.0) return std::abs(got);
  return std::abs(got - want) / std::abs(want);
}

}  // namespace echosim::test
