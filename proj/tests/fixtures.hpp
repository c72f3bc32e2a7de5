#pragma once

// Worked examples shared by several suites.

#include "tlg/sigma.hpp"

namespace fixtures {

using namespace tlg;

inline ToricVarietyData p1xp1() {
  return ToricVarietyData(IntMatrix{{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                          {"x0", "y0", "xinf", "yinf"}, true, true);
}

inline ToricVarietyData p1() { return ToricVarietyData(IntMatrix{{1}, {-1}}, {"u", "v"}, true, true); }

inline SplitBundleData elliptic_bundle() { return SplitBundleData(p1xp1(), {ints({1, 1, 1, 1})}); }

inline SplitBundleData threepoints_bundle() { return SplitBundleData(p1(), {ints({2, 1})}); }

inline ToricLGModel elliptic_model(LiftVector K = LiftVector(4)) {
  return build_lg(elliptic_bundle(), K, SectionSpec::generic_section(SectionOrder::Angular));
}

inline ToricLGModel threepoints_model(LiftVector K = LiftVector(2)) {
  return build_lg(threepoints_bundle(), K, SectionSpec::generic_section(SectionOrder::Angular));
}

inline ToricLGModel with_b_alpha(const ToricLGModel& M, const RatVector& alpha) {
  return ToricLGModel(M.A, LinearData(M.B.matrix, imaginary_lift(alpha)), M.blocks);
}

inline const IntMatrix kDivE{{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {0, 0, 1}};

inline const IntMatrix kMon{{0, 1, 1},   {1, 1, 1},   {1, 0, 1},  {1, -1, 1}, {0, -1, 1},
                            {-1, -1, 1}, {-1, 0, 1}, {-1, 1, 1}, {0, 0, 1}};

inline const IntMatrix kDivX3{{1, 2}, {-1, 1}, {0, 1}};

inline const IntMatrix kMonW{{1, 1}, {-1, 1}, {-2, 1}, {0, 1}};

inline const IntMatrix kDiamond{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}};

}  // namespace fixtures
