#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "optseg/core.hpp"

namespace optseg {

/// Boundary placements for a length-N sequence: bits[i] == true places a
/// boundary after position i+1 (so N-1 bits in total). Masks are bijective
/// with the unconstrained segmentations of the sequence.
struct BoundaryMask {
  std::vector<bool> bits;

  int sequence_length() const noexcept { return static_cast<int>(bits.size()) + 1; }
};

namespace detail {

// bit k of `mask` = boundary after position k+1
inline bool mask_lengths_within(std::uint64_t mask, int n, int lo, int hi) {
  int prev = 0;
  for (int k = 0; k + 1 < n; ++k) {
    if (mask >> k & 1) {
      const int len = k + 1 - prev;
      if (len < lo || len > hi) return false;
      prev = k + 1;
    }
  }
  const int last = n - prev;
  return last >= lo && last <= hi;
}

inline Segmentation mask_to_segmentation(std::uint64_t mask, int n) {
  Segmentation p;
  int start = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (mask >> k & 1) {
      p.segments.push_back({start, k + 1});
      start = k + 2;
    }
  }
  p.segments.push_back({start, n});
  return p;
}

inline void check_enumerable(int n) {
  if (n < 1) throw DomainError("enumeration requires N >= 1");
  if (n > 63) throw DomainError("enumeration supports N <= 63");
}

}  // namespace detail

inline Segmentation from_mask(const BoundaryMask& mask) {
  std::uint64_t m = 0;
  for (std::size_t k = 0; k < mask.bits.size(); ++k)
    if (mask.bits[k]) m |= std::uint64_t{1} << k;
  return detail::mask_to_segmentation(m, mask.sequence_length());
}

/// Inverse of from_mask for validated segmentations (N taken from the last
/// segment's end).
inline BoundaryMask to_mask(const Segmentation& p) {
  if (p.segments.empty()) throw ContractError("to_mask: empty segmentation");
  const int n = p.segments.back().end;
  BoundaryMask mask;
  mask.bits.assign(n - 1, false);
  for (std::size_t i = 0; i + 1 < p.segments.size(); ++i)
    mask.bits[p.segments[i].end - 1] = true;
  return mask;
}

/// Streams every segmentation of a length-N sequence with all segment
/// lengths inside `bounds`, each exactly once.
///
/// Order: a mask integer has bit k set when a boundary follows position k+1;
/// masks are visited in decreasing integer order. Equivalently the order is
/// lexicographic with boundary-present before boundary-absent, comparing the
/// latest boundary position first: all singletons come first, the whole
/// sequence last. Bounded enumeration filters masks by run length, so every
/// bounds case shares this single code path.
class SegmentationEnumerator {
 public:
  SegmentationEnumerator(int n, SegmentBounds bounds = {})
      : n_(n), lo_(bounds.min_len), hi_(bounds.max_for(n)) {
    detail::check_enumerable(n);
    check_bounds(bounds);
    cursor_ = (std::int64_t{1} << (n - 1)) - 1;
  }

  std::optional<Segmentation> next() {
    while (cursor_ >= 0) {
      const auto mask = static_cast<std::uint64_t>(cursor_--);
      if (detail::mask_lengths_within(mask, n_, lo_, hi_))
        return detail::mask_to_segmentation(mask, n_);
    }
    return std::nullopt;
  }

 private:
  int n_;
  int lo_;
  int hi_;
  std::int64_t cursor_;
};

/// Number of segmentations of a length-N sequence under `bounds`, by
/// exhaustive mask enumeration. Exponential: intended for N up to ~25.
inline BigInt count_segmentations_bruteforce(int n, SegmentBounds bounds = {}) {
  detail::check_enumerable(n);
  check_bounds(bounds);
  const int lo = bounds.min_len;
  const int hi = bounds.max_for(n);
  BigInt count = 0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (detail::mask_lengths_within(mask, n, lo, hi)) ++count;
  return count;
}

/// Ground-truth solver: evaluates every admissible segmentation and keeps
/// the best; ties go to the first in enumeration order.
inline OptimalResult solve_bruteforce(const Sequence& seq, const Scoring& f,
                                      SegmentBounds bounds = {}) {
  std::optional<OptimalResult> best;
  SegmentationEnumerator candidates(seq.size(), bounds);
  while (auto p = candidates.next()) {
    BigInt value = 0;
    for (const auto& seg : p->segments) value += f.score(seq, seg);
    if (!best || value > best->value) best = OptimalResult{std::move(*p), std::move(value)};
  }
  if (!best)
    throw InfeasibleError("no segmentation of N=" + std::to_string(seq.size()) +
                          " satisfies segment bounds [" + std::to_string(bounds.min_len) + "," +
                          std::to_string(bounds.max_for(seq.size())) + "]");
  return std::move(*best);
}

}  // namespace optseg
