// Prints the exponential growth factor of the segmentation search space for
// a range of segment-length bounds, next to the empirical coefficient ratio
// at N = 200.

#include <cstdio>

#include "optseg/optseg.hpp"

using namespace optseg;

int main() {
  const std::vector<std::pair<const char*, SegmentBounds>> cases = {
      {"unconstrained", SegmentBounds::unconstrained()},
      {"parts >= 2", SegmentBounds::at_least(2)},
      {"parts >= 3", SegmentBounds::at_least(3)},
      {"parts <= 2", SegmentBounds::of(1, 2)},
      {"parts <= 5", SegmentBounds::of(1, 5)},
      {"parts in [2,3]", SegmentBounds::of(2, 3)},
      {"parts in [3,7]", SegmentBounds::of(3, 7)},
  };

  std::printf("%-16s %-12s %-18s %-18s\n", "bounds", "alpha", "A (analytic)", "ratio at N=200");
  for (const auto& [label, bounds] : cases) {
    const auto gf = gf_for_bounds(bounds);
    const auto est = growth_factor(gf);
    const double ratio = empirical_growth(coefficients(gf, 200));
    std::printf("%-16s %-12.8f %-18.12f %-18.12f\n", label, est.alpha, est.growth, ratio);
  }
  return 0;
}
