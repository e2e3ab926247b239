#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "optseg/core.hpp"

namespace optseg {

/// Closed integer interval [lo, hi].
struct Interval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool intersects(const Interval& o) const noexcept {
    return std::max(lo, o.lo) <= std::min(hi, o.hi);
  }
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct WeightedInterval {
  Interval interval;
  BigInt weight;
};

using IntervalFamily = std::vector<WeightedInterval>;

/// Undirected vertex-weighted graph. Graphs built from intervals carry their
/// interval model; segment graphs additionally record which segment each
/// vertex stands for. Immutable after construction by the builders below.
struct WeightedGraph {
  std::vector<BigInt> weights;
  std::vector<std::pair<int, int>> edges;  ///< normalized: u < v, sorted
  std::vector<std::vector<int>> adj;       ///< sorted neighbor lists
  std::optional<std::vector<Interval>> intervals;  ///< interval model, when built from one
  std::optional<std::vector<Segment>> segments;    ///< vertex -> segment provenance

  int order() const noexcept { return static_cast<int>(weights.size()); }
};

namespace detail {

inline void attach_edges(WeightedGraph& g, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges)
    if (u > v) std::swap(u, v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  g.adj.assign(g.order(), {});
  for (const auto& [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
  g.edges = std::move(edges);
}

inline std::vector<std::pair<int, int>> intersection_edges(const std::vector<Interval>& iv) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(iv.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (iv[i].intersects(iv[j])) edges.emplace_back(i, j);
  return edges;
}

}  // namespace detail

/// Builds a graph from explicit edges. Test graphs need not be interval
/// graphs, in which case no interval model is attached.
inline WeightedGraph make_graph(std::vector<BigInt> weights,
                                std::vector<std::pair<int, int>> edges) {
  WeightedGraph g;
  g.weights = std::move(weights);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
      throw RangeError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loops are not allowed");
  }
  detail::attach_edges(g, std::move(edges));
  return g;
}

/// Intersection graph of a family of weighted intervals: one vertex per
/// interval (input order preserved), an edge exactly when two intervals
/// share a point.
inline WeightedGraph build_interval_graph(const IntervalFamily& family) {
  WeightedGraph g;
  std::vector<Interval> iv;
  iv.reserve(family.size());
  for (const auto& wi : family) {
    if (wi.interval.lo > wi.interval.hi)
      throw DomainError("intervals must be non-empty (lo <= hi)");
    iv.push_back(wi.interval);
    g.weights.push_back(wi.weight);
  }
  detail::attach_edges(g, detail::intersection_edges(iv));
  g.intervals = std::move(iv);
  return g;
}

/// The reduction target for a segmentation instance: one vertex per
/// contiguous segment — N(N+1)/2 in total — with weight -F(segment), and an
/// edge between every overlapping pair. Vertices are ordered by (start, end)
/// and keep their segment as provenance.
inline WeightedGraph build_segment_graph(const Sequence& seq, const Scoring& f) {
  const int n = seq.size();
  if (n < 1) throw DomainError("build_segment_graph requires N >= 1");
  WeightedGraph g;
  std::vector<Interval> iv;
  std::vector<Segment> segs;
  const std::size_t count = static_cast<std::size_t>(n) * (n + 1) / 2;
  g.weights.reserve(count);
  iv.reserve(count);
  segs.reserve(count);
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const Segment seg{i, j};
      g.weights.push_back(-f.score(seq, seg));
      iv.push_back({seg.start, seg.end});
      segs.push_back(seg);
    }
  }
  detail::attach_edges(g, detail::intersection_edges(iv));
  g.intervals = std::move(iv);
  g.segments = std::move(segs);
  return g;
}

/// A subset of vertices together with its total weight Q.
struct VertexSet {
  std::vector<int> members;  ///< sorted, unique
  BigInt total_weight;       ///< Q = sum of member weights
};

inline VertexSet make_vertex_set(const WeightedGraph& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  VertexSet vs;
  vs.total_weight = 0;
  for (int v : members) {
    if (v < 0 || v >= g.order())
      throw RangeError("vertex index " + std::to_string(v) + " out of range");
    vs.total_weight += g.weights[v];
  }
  vs.members = std::move(members);
  return vs;
}

namespace detail {

inline std::vector<char> membership(const WeightedGraph& g, const VertexSet& vs) {
  std::vector<char> in(g.order(), 0);
  for (int v : vs.members) {
    if (v < 0 || v >= g.order())
      throw RangeError("vertex index " + std::to_string(v) + " out of range");
    in[v] = 1;
  }
  return in;
}

}  // namespace detail

/// No edge joins two members.
inline bool is_independent(const WeightedGraph& g, const VertexSet& vs) {
  const auto in = detail::membership(g, vs);
  for (int v : vs.members)
    for (int u : g.adj[v])
      if (in[u]) return false;
  return true;
}

/// Every vertex is a member or adjacent to one.
inline bool is_dominating(const WeightedGraph& g, const VertexSet& vs) {
  const auto in = detail::membership(g, vs);
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    bool covered = false;
    for (int u : g.adj[v])
      if (in[u]) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

/// Independent, and no vertex can be added without breaking independence.
inline bool is_maximal_independent(const WeightedGraph& g, const VertexSet& vs) {
  if (!is_independent(g, vs)) return false;
  const auto in = detail::membership(g, vs);
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) continue;
    bool blocked = false;
    for (int u : g.adj[v])
      if (in[u]) {
        blocked = true;
        break;
      }
    if (!blocked) return false;  // v could join
  }
  return true;
}

/// Dominating, and removing any member breaks dominance.
inline bool is_minimal_dominating(const WeightedGraph& g, const VertexSet& vs) {
  if (!is_dominating(g, vs)) return false;
  const auto in = detail::membership(g, vs);
  // dominator count per vertex: members of its closed neighborhood
  std::vector<int> dominators(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (in[v]) ++dominators[v];
    for (int u : g.adj[v])
      if (in[u]) ++dominators[v];
  }
  for (int m : vs.members) {
    bool needed = dominators[m] == 1;  // m dominates itself alone
    if (!needed)
      for (int u : g.adj[m])
        if (dominators[u] == 1) {  // u's sole dominator is m
          needed = true;
          break;
        }
    if (!needed) return false;
  }
  return true;
}

/// Exhaustive minimum-weight independent dominating set. Exponential in the
/// vertex count (capped at 25); ties go to the lexicographically smallest
/// member list. An empty graph yields the empty set with Q = 0.
inline VertexSet mwids_bruteforce(const WeightedGraph& g) {
  const int n = g.order();
  if (n == 0) return {{}, BigInt(0)};
  if (n > 25) throw DomainError("mwids_bruteforce supports at most 25 vertices");

  std::vector<std::uint64_t> open(n, 0), closed(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.adj[v]) open[v] |= std::uint64_t{1} << u;
    closed[v] = open[v] | std::uint64_t{1} << v;
  }
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;

  auto members_of = [](std::uint64_t sub) {
    std::vector<int> m;
    for (int v = 0; sub; ++v, sub >>= 1)
      if (sub & 1) m.push_back(v);
    return m;
  };

  std::optional<std::uint64_t> best_sub;
  BigInt best_q;
  for (std::uint64_t sub = 0; sub <= all; ++sub) {
    bool independent = true;
    std::uint64_t covered = 0;
    for (std::uint64_t rest = sub; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (open[v] & sub) {
        independent = false;
        break;
      }
      covered |= closed[v];
    }
    if (!independent || covered != all) continue;
    BigInt q = 0;
    for (std::uint64_t rest = sub; rest;) {
      const int v = std::countr_zero(rest);
      rest &= rest - 1;
      q += g.weights[v];
    }
    if (!best_sub || q < best_q ||
        (q == best_q && std::ranges::lexicographical_compare(members_of(sub),
                                                             members_of(*best_sub)))) {
      best_sub = sub;
      best_q = std::move(q);
    }
  }
  // a maximal independent set always exists, so best_sub is set
  return {members_of(*best_sub), std::move(best_q)};
}

/// Minimum-weight independent dominating set for graphs that carry an
/// interval model, in O(n^2).
///
/// Candidates are exactly the maximal independent sets, which on an interval
/// model are the left-to-right chains of pairwise disjoint intervals such
/// that no family interval fits strictly inside a gap (before the first
/// pick, between consecutive picks, after the last). The sweep processes
/// intervals by right endpoint and tracks, per interval, the cheapest valid
/// chain ending there. Matches mwids_bruteforce on Q; the witness may be a
/// different optimal set.
inline VertexSet mwids_interval(const WeightedGraph& g) {
  if (!g.intervals) throw ContractError("mwids_interval: graph carries no interval model");
  const int n = g.order();
  if (n == 0) return {{}, BigInt(0)};
  const auto& iv = *g.intervals;

  // by_lo: vertices sorted by lo; suffix_min_hi[k] = min hi over by_lo[k..]
  std::vector<int> by_lo(n);
  for (int v = 0; v < n; ++v) by_lo[v] = v;
  std::sort(by_lo.begin(), by_lo.end(),
            [&](int a, int b) { return iv[a].lo < iv[b].lo; });
  std::vector<std::int64_t> lo_sorted(n);
  std::vector<std::int64_t> suffix_min_hi(n + 1, std::numeric_limits<std::int64_t>::max());
  for (int k = 0; k < n; ++k) lo_sorted[k] = iv[by_lo[k]].lo;
  for (int k = n - 1; k >= 0; --k)
    suffix_min_hi[k] = std::min(suffix_min_hi[k + 1], iv[by_lo[k]].hi);

  // smallest hi among intervals with lo > bound (max() when none)
  auto min_hi_right_of = [&](std::int64_t bound) {
    const auto it = std::upper_bound(lo_sorted.begin(), lo_sorted.end(), bound);
    return suffix_min_hi[it - lo_sorted.begin()];
  };
  // some interval lies strictly inside the open gap (a, b)?
  auto gap_holds_interval = [&](std::int64_t a, std::int64_t b) {
    return min_hi_right_of(a) < b;
  };
  // some interval lies entirely right of bound?
  auto anything_right_of = [&](std::int64_t bound) {
    return std::upper_bound(lo_sorted.begin(), lo_sorted.end(), bound) != lo_sorted.end();
  };

  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(iv[a].hi, iv[a].lo, a) < std::tie(iv[b].hi, iv[b].lo, b);
  });

  constexpr int kNone = -1, kStart = -2;
  std::vector<std::optional<BigInt>> best(n);
  std::vector<int> parent(n, kNone);
  for (int idx = 0; idx < n; ++idx) {
    const int v = order[idx];
    std::optional<BigInt> incoming;
    int from = kNone;
    // chain may start at v when no interval ends strictly left of it
    if (suffix_min_hi[0] >= iv[v].lo) {
      incoming = BigInt(0);
      from = kStart;
    }
    for (int jdx = 0; jdx < idx; ++jdx) {
      const int u = order[jdx];
      if (!best[u] || iv[u].hi >= iv[v].lo) continue;
      if (gap_holds_interval(iv[u].hi, iv[v].lo)) continue;
      if (!incoming || *best[u] < *incoming) {
        incoming = *best[u];
        from = u;
      }
    }
    if (incoming) {
      best[v] = *incoming + g.weights[v];
      parent[v] = from;
    }
  }

  std::optional<int> last;
  for (int v = 0; v < n; ++v) {
    if (!best[v]) continue;
    if (anything_right_of(iv[v].hi)) continue;  // gap after the last pick
    if (!last || *best[v] < *best[*last]) last = v;
  }
  if (!last) throw ContractError("mwids_interval: no maximal independent chain found");

  std::vector<int> members;
  for (int v = *last; v != kStart; v = parent[v]) members.push_back(v);
  return make_vertex_set(g, std::move(members));
}

/// Maps an independent dominating set of a segment graph back to the
/// segmentation it encodes (members sorted by segment start). The graph must
/// carry segment provenance. V(P) of the result equals -Q(vs).
inline Segmentation solution_to_segmentation(const WeightedGraph& g, const VertexSet& vs) {
  if (!g.segments) throw ContractError("solution_to_segmentation: graph has no segment provenance");
  if (!is_independent(g, vs) || !is_dominating(g, vs))
    throw ContractError("solution_to_segmentation: vertex set is not independent dominating");
  Segmentation p;
  for (int v : vs.members) p.segments.push_back((*g.segments)[v]);
  std::sort(p.segments.begin(), p.segments.end());
  return p;
}

/// Visits every maximal independent set as a vertex bitmask
/// (Bron-Kerbosch with pivoting on the complement graph; order <= 64).
inline void for_each_maximal_independent_set(
    const WeightedGraph& g, const std::function<void(std::uint64_t)>& emit) {
  const int n = g.order();
  if (n > 64) throw DomainError("maximal independent set enumeration supports <= 64 vertices");
  if (n == 0) return;
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> compat(n);  // non-neighbors, self excluded
  for (int v = 0; v < n; ++v) {
    std::uint64_t adj_mask = 0;
    for (int u : g.adj[v]) adj_mask |= std::uint64_t{1} << u;
    compat[v] = all & ~adj_mask & ~(std::uint64_t{1} << v);
  }

  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t chosen, std::uint64_t candidates, std::uint64_t excluded) {
        if (!candidates && !excluded) {
          emit(chosen);
          return;
        }
        // pivot: a vertex compatible with as many candidates as possible
        int pivot = -1, best_cover = -1;
        for (std::uint64_t rest = candidates | excluded; rest;) {
          const int v = std::countr_zero(rest);
          rest &= rest - 1;
          const int cover = std::popcount(candidates & compat[v]);
          if (cover > best_cover) {
            best_cover = cover;
            pivot = v;
          }
        }
        for (std::uint64_t rest = candidates & ~compat[pivot]; rest;) {
          const int v = std::countr_zero(rest);
          rest &= rest - 1;
          const std::uint64_t bit = std::uint64_t{1} << v;
          expand(chosen | bit, candidates & compat[v], excluded & compat[v]);
          candidates &= ~bit;
          excluded |= bit;
        }
      };
  expand(0, all, 0);
}

}  // namespace optseg
