#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "optseg/core.hpp"

namespace optseg {

/// A solver-ready problem instance: the sequence, the scoring function and
/// the segment-length bounds (unconstrained when the file omits them).
struct Instance {
  Sequence sequence;
  Scoring scoring;
  SegmentBounds bounds;
};

/// Parses the instance JSON:
///
///   {"sequence": [..ints..],
///    "scoring": {"kind": "table", "entries": [{"start":1,"end":2,"score":7},...], "default":1}
///             | {"kind": "preferred_length", "base":B, "penalty":P, "target":L}
///             | {"kind": "content_dictionary", "entries":[{"pattern":[...],"score":K},...], "default":1}
///             | {"kind": "content_sum_clamped"},
///    "bounds": {"min":a, "max":b}}        // optional, each field optional
///
/// Everything is validated: non-empty sequence, in-range table segments,
/// scores >= 1, totality of the scoring, sane bounds. Violations raise
/// ParseError.
inline Instance parse_instance(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("instance must be a JSON object");
    if (!doc.contains("sequence") || !doc["sequence"].is_array())
      throw ParseError("instance needs a \"sequence\" array");
    Sequence seq;
    for (const auto& v : doc["sequence"]) {
      if (!v.is_number_integer()) throw ParseError("sequence elements must be integers");
      seq.elements.push_back(v.get<std::int64_t>());
    }
    if (seq.elements.empty()) throw ParseError("sequence must be non-empty");
    const int n = seq.size();

    if (!doc.contains("scoring") || !doc["scoring"].is_object())
      throw ParseError("instance needs a \"scoring\" object");
    const auto& sc = doc["scoring"];
    const std::string kind = sc.value("kind", "");

    std::optional<Scoring> scoring;
    if (kind == "table") {
      std::vector<TableEntry> entries;
      for (const auto& e : sc.value("entries", nlohmann::json::array())) {
        TableEntry te{{e.at("start").get<int>(), e.at("end").get<int>()},
                      e.at("score").get<std::int64_t>()};
        if (!segment_in_range(te.segment, n))
          throw ParseError("table entry " + to_string(te.segment) +
                           " is out of range for N=" + std::to_string(n));
        entries.push_back(te);
      }
      std::optional<std::int64_t> fallback;
      if (sc.contains("default")) fallback = sc["default"].get<std::int64_t>();
      scoring = Scoring::table(std::move(entries), fallback);
    } else if (kind == "preferred_length") {
      scoring = Scoring::preferred_length(sc.at("base").get<std::int64_t>(),
                                          sc.at("penalty").get<std::int64_t>(),
                                          sc.at("target").get<int>());
    } else if (kind == "content_dictionary") {
      std::vector<DictEntry> entries;
      for (const auto& e : sc.value("entries", nlohmann::json::array())) {
        DictEntry de;
        for (const auto& v : e.at("pattern")) de.pattern.push_back(v.get<std::int64_t>());
        de.score = e.at("score").get<std::int64_t>();
        entries.push_back(std::move(de));
      }
      std::optional<std::int64_t> fallback;
      if (sc.contains("default")) fallback = sc["default"].get<std::int64_t>();
      scoring = Scoring::content_dictionary(std::move(entries), fallback);
    } else if (kind == "content_sum_clamped") {
      scoring = Scoring::content_sum_clamped();
    } else {
      throw ParseError("unknown scoring kind \"" + kind + "\"");
    }
    scoring->require_total(seq);

    SegmentBounds bounds;
    if (doc.contains("bounds")) {
      const auto& b = doc["bounds"];
      if (!b.is_object()) throw ParseError("\"bounds\" must be an object");
      bounds.min_len = b.value("min", 1);
      if (b.contains("max")) bounds.max_len = b["max"].get<int>();
      check_bounds(bounds);
    }
    return {std::move(seq), std::move(*scoring), bounds};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed instance: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open instance file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_instance(doc);
}

/// {"segments":[[s,e],...],"value":v}. The value is emitted as a JSON number
/// when it fits in 64 bits and as a decimal string otherwise.
inline nlohmann::json result_to_json(const OptimalResult& result) {
  nlohmann::json segs = nlohmann::json::array();
  for (const auto& seg : result.segmentation.segments)
    segs.push_back(nlohmann::json::array({seg.start, seg.end}));
  nlohmann::json out{{"segments", std::move(segs)}};
  if (result.value.fits_slong_p())
    out["value"] = static_cast<std::int64_t>(result.value.get_si());
  else
    out["value"] = result.value.get_str();
  return out;
}

}  // namespace optseg
