#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "optseg/core.hpp"
#include "optseg/graph.hpp"

namespace optseg {

/// Deterministic pseudorandom source for the self-check suite, the benchmark
/// command and the property tests. Same seed, same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_) < p; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Sequence of length n with small signed elements.
inline Sequence random_sequence(Rng& rng, int n, int value_lo = -50, int value_hi = 50) {
  Sequence s;
  s.elements.reserve(n);
  for (int i = 0; i < n; ++i) s.elements.push_back(rng.uniform(value_lo, value_hi));
  return s;
}

/// Full table scoring over every segment of a length-n sequence, scores
/// uniform in [score_lo, score_hi].
inline Scoring random_table_scoring(Rng& rng, int n, int score_lo = 1, int score_hi = 100) {
  std::vector<TableEntry> entries;
  entries.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      entries.push_back({{i, j}, std::int64_t{rng.uniform(score_lo, score_hi)}});
  return Scoring::table(std::move(entries), std::nullopt);
}

/// Random bounds guaranteed feasible for a length-n sequence.
inline SegmentBounds random_feasible_bounds(Rng& rng, int n) {
  for (;;) {
    SegmentBounds b;
    b.min_len = rng.uniform(1, n);
    if (rng.chance(0.5)) b.max_len = rng.uniform(b.min_len, n);
    if (feasible_for(b, n)) return b;
  }
}

/// Family of up to max_n weighted intervals with integer endpoints in
/// [0, coord_hi] and weights in [weight_lo, weight_hi].
inline IntervalFamily random_interval_family(Rng& rng, int max_n, int coord_hi = 20,
                                             int weight_lo = -100, int weight_hi = 100) {
  const int n = rng.uniform(1, max_n);
  IntervalFamily family;
  family.reserve(n);
  for (int k = 0; k < n; ++k) {
    const std::int64_t lo = rng.uniform(0, coord_hi);
    const std::int64_t hi = lo + rng.uniform(0, coord_hi - static_cast<int>(lo));
    family.push_back({{lo, hi}, BigInt(rng.uniform(weight_lo, weight_hi))});
  }
  return family;
}

/// Erdos-Renyi style random graph: up to max_n vertices, each edge present
/// with probability edge_p, weights in [weight_lo, weight_hi]. Not an
/// interval graph in general.
inline WeightedGraph random_er_graph(Rng& rng, int max_n, double edge_p = 0.4,
                                     int weight_lo = -100, int weight_hi = 100) {
  const int n = rng.uniform(1, max_n);
  std::vector<BigInt> weights;
  weights.reserve(n);
  for (int v = 0; v < n; ++v) weights.emplace_back(rng.uniform(weight_lo, weight_hi));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_p)) edges.emplace_back(u, v);
  return make_graph(std::move(weights), std::move(edges));
}

/// Constant-time deterministic scoring in [1, 100]: a splitmix64 hash of
/// (seed, start, end). Behaves like a random table without materializing
/// one, so it scales to large N in benchmarks.
inline Scoring hashed_scoring(std::uint64_t seed) {
  return Scoring::custom([seed](const Sequence&, const Segment& seg) {
    std::uint64_t z = seed ^ (static_cast<std::uint64_t>(seg.start) << 32) ^
                      static_cast<std::uint64_t>(seg.end);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return BigInt(1 + static_cast<long>(z % 100));
  });
}

}  // namespace optseg
