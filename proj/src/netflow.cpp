#include "rankforge/netflow.hpp"

#include <cmath>

#include "rankforge/error.hpp"

namespace rankforge::netflow {

NodeIndex WeightedDigraph::add_node(std::string_view name) {
  std::string key(name);
  if (key.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "node name must not be empty");
  }
  auto [it, inserted] = index_.try_emplace(key, nodes_.size());
  if (inserted) nodes_.push_back(std::move(key));
  return it->second;
}

bool WeightedDigraph::add_edge(std::string_view source, std::string_view target,
                               double weight) {
  if (!std::isfinite(weight) || weight <= 0.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "edge weights must be positive and finite");
  }
  const NodeIndex s = add_node(source);
  const NodeIndex t = add_node(target);
  if (s == t) {
    ++dropped_self_loops_;
    return false;
  }
  edges_[{s, t}] += weight;
  return true;
}

double WeightedDigraph::weight(NodeIndex source, NodeIndex target) const {
  auto it = edges_.find({source, target});
  return it == edges_.end() ? 0.0 : it->second;
}

WeightedDigraph WeightedDigraph::reversed() const {
  WeightedDigraph out;
  for (const auto& name : nodes_) out.add_node(name);
  for (const auto& [edge, w] : edges_) {
    out.add_edge(nodes_[edge.second], nodes_[edge.first], w);
  }
  out.dropped_self_loops_ = dropped_self_loops_;
  return out;
}

WeightedDigraph WeightedDigraph::scaled(double factor) const {
  if (!std::isfinite(factor) || factor <= 0.0) {
    throw Error(ErrorKind::kInvalidArgument, "scale factor must be positive");
  }
  WeightedDigraph out;
  for (const auto& name : nodes_) out.add_node(name);
  for (const auto& [edge, w] : edges_) {
    out.add_edge(nodes_[edge.first], nodes_[edge.second], w * factor);
  }
  out.dropped_self_loops_ = dropped_self_loops_;
  return out;
}

competition::MatchList digraph_to_matches(const WeightedDigraph& g) {
  competition::MatchList matches;
  for (const auto& name : g.nodes()) matches.add_team(name);
  const std::size_t n = g.node_count();
  for (NodeIndex i = 0; i < n; ++i) {
    for (NodeIndex j = i + 1; j < n; ++j) {
      const double forward = g.weight(i, j);
      const double backward = g.weight(j, i);
      if (forward == 0.0 && backward == 0.0) continue;
      matches.add_match(competition::Match{1, i, j, forward, backward});
    }
  }
  return matches;
}

MethodResult rate_network(const WeightedDigraph& g, const RunConfig& config) {
  return rate_matches(digraph_to_matches(g), config);
}

}  // namespace rankforge::netflow
