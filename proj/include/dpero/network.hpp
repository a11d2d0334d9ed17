#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace dpero {

// Dense node index, unique within a network.
using NodeId = std::uint32_t;

constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

// One outgoing arc.
struct Edge {
  NodeId target;
  double travel_time;
};

// Arc description used when building a network.
struct EdgeDef {
  NodeId source = 0;
  NodeId target = 0;
  double travel_time = 1.0;

  bool operator==(const EdgeDef&) const = default;
};

// Additive cost -log(1 - p) of traversing a node whose capture probability
// is p.Zero for a safe node, strictly increasing in p, +infinity for p = 1
// (the node cannot be survived). Throws DomainError unless 0 <= p <= 1.
double risk_cost(double p);

// Directed graph with a capture probability per node and a travel time per
// arc. Immutable once built, so instances can be shared freely across
// concurrent solver runs.
class RiskNetwork {
public:
  // Validates and builds. Rejects dangling endpoints, self-loops, duplicate
  // (source, target) arcs, negative or non-finite travel times, and capture
  // probabilities outside [0, 1].
  RiskNetwork(std::size_t node_count, const std::vector<EdgeDef>& edges,
              std::vector<double> capture_probs);

  std::size_t node_count() const { return capture_prob_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Edge> out_edges(NodeId v) const { return out_edges_[v]; }
  double capture_prob(NodeId v) const { return capture_prob_[v]; }
  const std::vector<double>& capture_probs() const { return capture_prob_; }

  // risk_cost(capture_prob(v))
  double node_risk_cost(NodeId v) const { return risk_weights_[v]; }
  const std::vector<double>& node_risk_costs() const { return risk_weights_; }

  bool has_edge(NodeId from, NodeId to) const;
  // Null if the arc does not exist.
  const Edge* find_edge(NodeId from, NodeId to) const;

  // Copy of this network with replaced per-node capture probabilities.
  RiskNetwork with_capture_probs(std::vector<double> probs) const;

  // All arcs grouped by source node in insertion order. Deterministic; used
  // for serialization and equality checks.
  std::vector<EdgeDef> edge_list() const;

private:
  std::vector<std::vector<Edge>> out_edges_;
  std::vector<double> capture_prob_;
  std::vector<double> risk_weights_;
  std::size_t edge_count_ = 0;
};

// Spec-level constructor wrapper; identical to the RiskNetwork constructor.
RiskNetwork build_network(std::size_t node_count,
                          const std::vector<EdgeDef>& edges,
                          std::vector<double> capture_probs);

// A scored start-to-exit route.
struct EscapePath {
  std::vector<NodeId> nodes;
  double risk_cost = 0.0;      // sum of node risk costs along the route
  double survival_prob = 1.0;  // product of (1 - p_c) along the route
  double travel_time = 0.0;    // sum of arc travel times
};

// Scores a node sequence: additive risk cost, multiplicative survival
// probability and total travel time. The sequence must be non-empty, simple,
// and consecutive nodes must be connected by an arc; otherwise throws
// InvalidPathError. survival_prob equals exp(-risk_cost) up to rounding
// whenever the cost is finite, and is exactly 0 when it is not.
EscapePath score_path(const RiskNetwork& network,
                      const std::vector<NodeId>& nodes);

}  // namespace dpero
