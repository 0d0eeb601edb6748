#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rankforge/competition.hpp"
#include "rankforge/pipeline.hpp"

namespace rankforge::netflow {

using NodeIndex = std::size_t;

// Directed network with positive weights. Parallel edges are summed on
// insertion and self-loops are dropped (and counted).
class WeightedDigraph {
 public:
  NodeIndex add_node(std::string_view name);

  // Returns false when the edge was a self-loop and got dropped.
  bool add_edge(std::string_view source, std::string_view target, double weight);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t dropped_self_loops() const noexcept { return dropped_self_loops_; }
  const std::vector<std::string>& nodes() const noexcept { return nodes_; }

  // Weight of source -> target, 0 when absent.
  double weight(NodeIndex source, NodeIndex target) const;
  const std::map<std::pair<NodeIndex, NodeIndex>, double>& edges() const noexcept {
    return edges_;
  }

  WeightedDigraph reversed() const;
  WeightedDigraph scaled(double factor) const;

 private:
  std::vector<std::string> nodes_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::map<std::pair<NodeIndex, NodeIndex>, double> edges_;
  std::size_t dropped_self_loops_ = 0;
};

// One match per unordered pair joined by at least one edge: i scores the
// weight of i -> j, j scores the weight of j -> i (0 when absent). Nodes keep
// their registry order as teams; every match is on day 1.
competition::MatchList digraph_to_matches(const WeightedDigraph& g);

// digraph_to_matches followed by the configured rating method. For Massey,
// r_i - r_j estimates the balance between nodes i and j.
MethodResult rate_network(const WeightedDigraph& g, const RunConfig& config);

}  // namespace rankforge::netflow
