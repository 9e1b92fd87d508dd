#pragma once

#include "m36/chow.hpp"

// Rings are built once per test binary.
inline const m36::ChowRing& lines_ring() {
  static const m36::ChowRing r(m36::ResolutionConfig::all_lines(), m36::Mode::Exact);
  return r;
}

inline const m36::ChowRing& planes_ring() {
  static const m36::ChowRing r(m36::ResolutionConfig::all_planes(), m36::Mode::Exact);
  return r;
}
