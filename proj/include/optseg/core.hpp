#pragma once

#include <algorithm>
#include <atomic>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "optseg/bigint.hpp"
#include "optseg/errors.hpp"

namespace optseg {

/// The finite integer sequence being segmented. Positions are 1-based.
struct Sequence {
  std::vector<std::int64_t> elements;

  int size() const noexcept { return static_cast<int>(elements.size()); }
};

/// A contiguous run of positions [start, end], 1-based, both inclusive.
struct Segment {
  int start = 1;
  int end = 1;

  int length() const noexcept { return end - start + 1; }
  bool overlaps(const Segment& o) const noexcept {
    return std::max(start, o.start) <= std::min(end, o.end);
  }
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

inline bool segment_in_range(const Segment& seg, int n) noexcept {
  return 1 <= seg.start && seg.start <= seg.end && seg.end <= n;
}

inline std::string to_string(const Segment& seg) {
  return "[" + std::to_string(seg.start) + "," + std::to_string(seg.end) + "]";
}

/// Minimum/maximum segment length. An absent maximum means "no limit", which
/// for a concrete sequence of length N is the same as N.
struct SegmentBounds {
  int min_len = 1;
  std::optional<int> max_len{};

  static SegmentBounds unconstrained() { return {}; }
  static SegmentBounds of(int lo, int hi) { return {lo, hi}; }
  static SegmentBounds at_least(int lo) { return {lo, std::nullopt}; }

  int max_for(int n) const noexcept { return max_len ? std::min(*max_len, n) : n; }
  bool unconstrained_for(int n) const noexcept {
    return min_len <= 1 && max_for(n) >= n;
  }
};

inline void check_bounds(const SegmentBounds& b) {
  if (b.min_len < 1) throw DomainError("segment bounds: min length must be >= 1");
  if (b.max_len && *b.max_len < b.min_len)
    throw DomainError("segment bounds: max length must be >= min length");
}

/// True when a length-n sequence admits at least one segmentation whose
/// segment lengths all lie within the bounds: some part count k must satisfy
/// k*min <= n <= k*max.
inline bool feasible_for(const SegmentBounds& b, int n) {
  check_bounds(b);
  if (n < 1) return false;
  const int lo = b.min_len;
  const int hi = b.max_for(n);
  if (lo > n) return false;
  const int k_min = (n + hi - 1) / hi;
  const int k_max = n / lo;
  return k_min <= k_max;
}

/// A table entry assigning a score to one specific segment.
struct TableEntry {
  Segment segment;
  std::int64_t score = 1;
};

/// A content pattern: matches segments whose element values equal `pattern`.
struct DictEntry {
  std::vector<std::int64_t> pattern;
  std::int64_t score = 1;
};

/// The scoring function F. It must map every legal segment of the instance
/// sequence to an integer >= 1. Four serializable kinds cover table-driven,
/// content-driven, length-preference and degenerate scorings; `custom`
/// accepts arbitrary callables for embedding.
class Scoring {
 public:
  using Fn = std::function<BigInt(const Sequence&, const Segment&)>;

  /// Explicit per-segment scores with an optional fallback for segments not
  /// listed. Without a fallback the table must cover every segment of the
  /// instance sequence (checked by require_total).
  static Scoring table(std::vector<TableEntry> entries,
                       std::optional<std::int64_t> fallback) {
    Table t;
    t.fallback = fallback;
    if (fallback && *fallback < 1)
      throw DomainError("table scoring: default score must be >= 1");
    for (const auto& e : entries) {
      if (e.segment.start < 1 || e.segment.start > e.segment.end)
        throw DomainError("table scoring: malformed segment " + to_string(e.segment));
      if (e.score < 1) throw DomainError("table scoring: scores must be >= 1");
      t.entries[{e.segment.start, e.segment.end}] = e.score;
    }
    return Scoring(std::move(t));
  }

  /// First pattern whose values equal the segment contents wins; fallback
  /// applies when nothing matches.
  static Scoring content_dictionary(std::vector<DictEntry> entries,
                                    std::optional<std::int64_t> fallback) {
    if (fallback && *fallback < 1)
      throw DomainError("content dictionary: default score must be >= 1");
    for (const auto& e : entries) {
      if (e.pattern.empty())
        throw DomainError("content dictionary: patterns must be non-empty");
      if (e.score < 1) throw DomainError("content dictionary: scores must be >= 1");
    }
    return Scoring(Dict{std::move(entries), fallback});
  }

  /// max(1, base - penalty * |length - target|): rewards segments near the
  /// preferred length, clamped so the result stays positive.
  static Scoring preferred_length(std::int64_t base, std::int64_t penalty, int target) {
    if (target < 1) throw DomainError("preferred length scoring: target must be >= 1");
    if (penalty < 0) throw DomainError("preferred length scoring: penalty must be >= 0");
    return Scoring(PreferredLength{base, penalty, target});
  }

  /// max(1, sum of element values over the segment).
  static Scoring content_sum_clamped() { return Scoring(ContentSum{}); }

  /// Same score for every segment.
  static Scoring constant(std::int64_t value) {
    return table({}, value);
  }

  /// Arbitrary callable; must return >= 1 (checked on every call). Lambdas
  /// composing gmp expressions should declare `-> BigInt` so the expression
  /// template does not outlive its operands.
  static Scoring custom(Fn fn) { return Scoring(Custom{std::move(fn)}); }

  /// F(p). Throws RangeError when the segment lies outside the sequence;
  /// the result is always >= 1.
  BigInt score(const Sequence& seq, const Segment& seg) const {
    if (!segment_in_range(seg, seq.size()))
      throw RangeError("segment " + to_string(seg) + " out of range for sequence of length " +
                       std::to_string(seq.size()));
    return std::visit([&](const auto& impl) { return eval(impl, seq, seg); }, impl_);
  }

  std::string_view kind() const noexcept {
    switch (impl_.index()) {
      case 0: return "table";
      case 1: return "content_dictionary";
      case 2: return "preferred_length";
      case 3: return "content_sum_clamped";
      default: return "custom";
    }
  }

  /// Verifies totality over `seq`: every segment must have a defined score.
  /// Kinds with a fallback or a closed formula are total by construction.
  void require_total(const Sequence& seq) const {
    const int n = seq.size();
    if (const auto* t = std::get_if<Table>(&impl_)) {
      if (t->fallback) return;
      const std::size_t segments = static_cast<std::size_t>(n) * (n + 1) / 2;
      if (t->entries.size() < segments)
        throw DomainError("table scoring lacks a default and covers only " +
                          std::to_string(t->entries.size()) + " of " +
                          std::to_string(segments) + " segments");
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          if (!t->entries.count({i, j}))
            throw DomainError("table scoring lacks a default and has no entry for " +
                              to_string(Segment{i, j}));
    } else if (const auto* d = std::get_if<Dict>(&impl_)) {
      if (d->fallback) return;
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          if (!match(*d, seq, Segment{i, j}))
            throw DomainError("content dictionary lacks a default and no pattern matches " +
                              to_string(Segment{i, j}));
    }
  }

 private:
  struct Table {
    std::map<std::pair<int, int>, std::int64_t> entries;
    std::optional<std::int64_t> fallback;
  };
  struct Dict {
    std::vector<DictEntry> entries;
    std::optional<std::int64_t> fallback;
  };
  struct PreferredLength {
    std::int64_t base = 1;
    std::int64_t penalty = 0;
    int target = 1;
  };
  struct ContentSum {};
  struct Custom {
    Fn fn;
  };

  using Impl = std::variant<Table, Dict, PreferredLength, ContentSum, Custom>;

  explicit Scoring(Impl impl) : impl_(std::move(impl)) {}

  static const std::int64_t* match(const Dict& d, const Sequence& seq, const Segment& seg) {
    const auto* data = seq.elements.data() + (seg.start - 1);
    const std::size_t len = static_cast<std::size_t>(seg.length());
    for (const auto& e : d.entries)
      if (e.pattern.size() == len && std::equal(e.pattern.begin(), e.pattern.end(), data))
        return &e.score;
    return nullptr;
  }

  static BigInt eval(const Table& t, const Sequence&, const Segment& seg) {
    auto it = t.entries.find({seg.start, seg.end});
    if (it != t.entries.end()) return BigInt(it->second);
    if (t.fallback) return BigInt(*t.fallback);
    throw ContractError("table scoring has no entry for " + to_string(seg) +
                        " and no default");
  }

  static BigInt eval(const Dict& d, const Sequence& seq, const Segment& seg) {
    if (const auto* s = match(d, seq, seg)) return BigInt(*s);
    if (d.fallback) return BigInt(*d.fallback);
    throw ContractError("content dictionary matches no pattern for " + to_string(seg) +
                        " and has no default");
  }

  static BigInt eval(const PreferredLength& p, const Sequence&, const Segment& seg) {
    const std::int64_t deviation = std::abs(std::int64_t{seg.length()} - p.target);
    BigInt value = BigInt(p.base) - BigInt(p.penalty) * deviation;
    return value < 1 ? BigInt(1) : value;
  }

  static BigInt eval(const ContentSum&, const Sequence& seq, const Segment& seg) {
    BigInt sum = 0;
    for (int i = seg.start; i <= seg.end; ++i) sum += seq.elements[i - 1];
    return sum < 1 ? BigInt(1) : sum;
  }

  static BigInt eval(const Custom& c, const Sequence& seq, const Segment& seg) {
    BigInt value = c.fn(seq, seg);
    if (value < 1)
      throw ContractError("custom scoring returned a value < 1 for " + to_string(seg));
    return value;
  }

  Impl impl_;
};

/// Shared call counter for scoring instrumentation (benchmarks, call-budget
/// tests).
struct ScoreCallCounter {
  std::atomic<std::uint64_t> calls{0};
};

/// Wraps a scoring function so every call bumps `counter` before delegating.
inline Scoring counted(Scoring inner, std::shared_ptr<ScoreCallCounter> counter) {
  return Scoring::custom(
      [inner = std::move(inner), counter = std::move(counter)](const Sequence& seq,
                                                               const Segment& seg) {
        counter->calls.fetch_add(1, std::memory_order_relaxed);
        return inner.score(seq, seg);
      });
}

/// An ordered list of segments intended to tile the whole sequence.
struct Segmentation {
  std::vector<Segment> segments;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;
};

/// Outcome of validate_segmentation: which constraint broke first and where.
struct ValidationReport {
  enum class Kind { ok, malformed, out_of_range, overlap, gap };

  Kind kind = Kind::ok;
  int position = 0;  ///< first offending 1-based sequence position
  std::string detail;

  bool ok() const noexcept { return kind == Kind::ok; }
};

/// Checks disjointness and coverage. Violations are results, not errors:
/// the report names the first broken constraint in position order.
inline ValidationReport validate_segmentation(const Sequence& seq, const Segmentation& p) {
  const int n = seq.size();
  for (const auto& seg : p.segments) {
    if (seg.start > seg.end)
      return {ValidationReport::Kind::malformed, seg.start,
              "segment " + to_string(seg) + " is reversed"};
    if (seg.start < 1 || seg.end > n)
      return {ValidationReport::Kind::out_of_range, seg.start < 1 ? seg.start : seg.end,
              "segment " + to_string(seg) + " lies outside positions 1.." + std::to_string(n)};
  }
  auto sorted = p.segments;
  std::sort(sorted.begin(), sorted.end());
  int expected = 1;
  for (const auto& seg : sorted) {
    if (seg.start < expected)
      return {ValidationReport::Kind::overlap, seg.start,
              "overlap at index " + std::to_string(seg.start)};
    if (seg.start > expected)
      return {ValidationReport::Kind::gap, expected,
              "positions " + std::to_string(expected) + ".." + std::to_string(seg.start - 1) +
                  " uncovered"};
    expected = seg.end + 1;
  }
  if (expected <= n)
    return {ValidationReport::Kind::gap, expected,
            "positions " + std::to_string(expected) + ".." + std::to_string(n) + " uncovered"};
  return {};
}

/// V(P): the sum of segment scores. The segmentation must validate.
inline BigInt segmentation_value(const Sequence& seq, const Segmentation& p, const Scoring& f) {
  const auto report = validate_segmentation(seq, p);
  if (!report.ok()) throw ContractError("segmentation_value: " + report.detail);
  BigInt total = 0;
  for (const auto& seg : p.segments) total += f.score(seq, seg);
  return total;
}

/// A segmentation achieving the maximum value, together with that value.
struct OptimalResult {
  Segmentation segmentation;
  BigInt value;
};

}  // namespace optseg
