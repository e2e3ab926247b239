#pragma once

#include <optional>
#include <vector>

#include "optseg/core.hpp"

namespace optseg {

/// Optimal segmentation by dynamic programming over prefix lengths:
///
///   best(j) = max over last-segment lengths l in [a, min(b, j)] of
///             best(j - l) + F(segment(j - l + 1, j)),   best(0) = 0.
///
/// best(0) is an accumulator seed, not a value for empty segmentations. The
/// scoring function is called at most N * (b - a + 1) times. On value ties
/// the shorter last segment wins at every prefix, which makes the witness
/// the first optimum in SegmentationEnumerator order (the same tie-break as
/// solve_bruteforce).
inline OptimalResult solve_dp(const Sequence& seq, const Scoring& f, SegmentBounds bounds = {}) {
  const int n = seq.size();
  if (n < 1) throw DomainError("solve_dp requires N >= 1");
  check_bounds(bounds);
  const int lo = bounds.min_len;
  const int hi = bounds.max_for(n);

  std::vector<std::optional<BigInt>> best(n + 1);
  std::vector<int> last_len(n + 1, 0);
  best[0] = BigInt(0);
  for (int j = 1; j <= n; ++j) {
    const int top = std::min(hi, j);
    for (int l = lo; l <= top; ++l) {
      if (!best[j - l]) continue;
      BigInt candidate = *best[j - l] + f.score(seq, Segment{j - l + 1, j});
      if (!best[j] || candidate > *best[j]) {
        best[j] = std::move(candidate);
        last_len[j] = l;
      }
    }
  }
  if (!best[n])
    throw InfeasibleError("no segmentation of N=" + std::to_string(n) +
                          " satisfies segment bounds [" + std::to_string(lo) + "," +
                          std::to_string(hi) + "]");

  Segmentation p;
  for (int j = n; j > 0; j -= last_len[j])
    p.segments.push_back({j - last_len[j] + 1, j});
  std::reverse(p.segments.begin(), p.segments.end());
  return {std::move(p), std::move(*best[n])};
}

}  // namespace optseg
