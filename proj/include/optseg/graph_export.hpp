#pragma once

#include <string>

#include <json.hpp>

#include "optseg/graph.hpp"

namespace optseg {

namespace detail {

inline std::string vertex_label(const WeightedGraph& g, int v) {
  std::string label;
  if (g.segments)
    label = to_string((*g.segments)[v]);
  else if (g.intervals)
    label = "[" + std::to_string((*g.intervals)[v].lo) + "," +
            std::to_string((*g.intervals)[v].hi) + "]";
  else
    label = "v" + std::to_string(v);
  return label + " w=" + g.weights[v].get_str();
}

}  // namespace detail

/// DOT rendering: one node per vertex labeled "[s,e] w=<weight>", one
/// undirected edge per overlap.
inline std::string to_dot(const WeightedGraph& g) {
  std::string out = "graph segments {\n";
  for (int v = 0; v < g.order(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + detail::vertex_label(g, v) + "\"];\n";
  for (const auto& [u, v] : g.edges)
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

/// {"vertices":[{"id":0,"interval":[lo,hi],"weight":w},...],"edges":[[u,v],...]}.
/// Weights are numbers when they fit in 64 bits, decimal strings otherwise.
/// Segment-graph vertices carry their segment under "segment".
inline nlohmann::json graph_to_json(const WeightedGraph& g) {
  nlohmann::json vertices = nlohmann::json::array();
  for (int v = 0; v < g.order(); ++v) {
    nlohmann::json item{{"id", v}};
    if (g.intervals)
      item["interval"] =
          nlohmann::json::array({(*g.intervals)[v].lo, (*g.intervals)[v].hi});
    if (g.segments)
      item["segment"] =
          nlohmann::json::array({(*g.segments)[v].start, (*g.segments)[v].end});
    if (g.weights[v].fits_slong_p())
      item["weight"] = static_cast<std::int64_t>(g.weights[v].get_si());
    else
      item["weight"] = g.weights[v].get_str();
    vertices.push_back(std::move(item));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back(nlohmann::json::array({u, v}));
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

/// Inverse of graph_to_json; restores weights, edges and the interval /
/// segment annotations when present.
inline WeightedGraph graph_from_json(const nlohmann::json& doc) {
  try {
    std::vector<BigInt> weights;
    std::vector<Interval> intervals;
    std::vector<Segment> segments;
    const auto& vertices = doc.at("vertices");
    for (const auto& item : vertices) {
      if (item.at("id").get<int>() != static_cast<int>(weights.size()))
        throw ParseError("graph JSON: vertex ids must be dense and ordered");
      const auto& w = item.at("weight");
      weights.push_back(w.is_string() ? BigInt(w.get<std::string>())
                                      : BigInt(static_cast<long>(w.get<std::int64_t>())));
      if (item.contains("interval"))
        intervals.push_back({item["interval"][0].get<std::int64_t>(),
                             item["interval"][1].get<std::int64_t>()});
      if (item.contains("segment"))
        segments.push_back({item["segment"][0].get<int>(), item["segment"][1].get<int>()});
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : doc.at("edges"))
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    WeightedGraph g = make_graph(std::move(weights), std::move(edges));
    if (intervals.size() == static_cast<std::size_t>(g.order()))
      g.intervals = std::move(intervals);
    if (segments.size() == static_cast<std::size_t>(g.order()))
      g.segments = std::move(segments);
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

}  // namespace optseg
