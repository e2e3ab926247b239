// Walks one instance through all three solvers: exhaustive search, the
// prefix DP, and the segment-graph reduction (build the graph, find a
// minimum-weight independent dominating set, map it back).

#include <iostream>

#include "optseg/optseg.hpp"

using namespace optseg;

int main() {
  const Sequence seq{{2, 7, 1, 8}};
  const auto scoring = Scoring::preferred_length(10, 6, 2);

  std::cout << "sequence length: " << seq.size() << "\n";

  const auto graph = build_segment_graph(seq, scoring);
  std::cout << "segment graph: " << graph.order() << " vertices ("
            << seq.size() * (seq.size() + 1) / 2 << " expected), " << graph.edges.size()
            << " overlap edges\n";

  const auto brute = solve_bruteforce(seq, scoring);
  const auto dp = solve_dp(seq, scoring);
  const auto ids = mwids_interval(graph);
  const auto mapped = solution_to_segmentation(graph, ids);

  std::cout << "brute-force value: " << brute.value.get_str() << "\n";
  std::cout << "dp value:          " << dp.value.get_str() << "\n";
  std::cout << "reduction value:   " << BigInt(-ids.total_weight).get_str() << "\n";

  std::cout << "optimal segmentation:";
  for (const auto& seg : mapped.segments) std::cout << " " << to_string(seg);
  std::cout << "\n";
  return 0;
}
