#include "dpero/network.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>
#include <utility>

#include "dpero/errors.hpp"

namespace dpero {

double risk_cost(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("capture probability must be in [0, 1], got " +
                      std::to_string(p));
  }
  if (p == 1.0) return kInfiniteCost;
  return -std::log1p(-p);
}

namespace {

std::uint64_t arc_key(NodeId from, NodeId to) {
  return (static_cast<std::uint64_t>(from) << 32) | to;
}

}  // namespace

RiskNetwork::RiskNetwork(std::size_t node_count,
                         const std::vector<EdgeDef>& edges,
                         std::vector<double> capture_probs) {
  if (capture_probs.size() != node_count) {
    throw DomainError("capture_probs has " +
                      std::to_string(capture_probs.size()) +
                      " entries for " + std::to_string(node_count) + " nodes");
  }
  risk_weights_.reserve(node_count);
  for (double p : capture_probs) {
    risk_weights_.push_back(risk_cost(p));  // throws on bad probability
  }
  capture_prob_ = std::move(capture_probs);
  out_edges_.resize(node_count);

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const EdgeDef& e : edges) {
    if (e.source >= node_count || e.target >= node_count) {
      throw DomainError("edge (" + std::to_string(e.source) + ", " +
                        std::to_string(e.target) +
                        ") has a dangling endpoint; node_count = " +
                        std::to_string(node_count));
    }
    if (e.source == e.target) {
      throw DomainError("self-loop at node " + std::to_string(e.source));
    }
    if (!std::isfinite(e.travel_time) || e.travel_time < 0.0) {
      throw DomainError("edge (" + std::to_string(e.source) + ", " +
                        std::to_string(e.target) +
                        ") has invalid travel time");
    }
    if (!seen.insert(arc_key(e.source, e.target)).second) {
      throw DomainError("duplicate edge (" + std::to_string(e.source) + ", " +
                        std::to_string(e.target) + ")");
    }
    out_edges_[e.source].push_back(Edge{e.target, e.travel_time});
  }
  edge_count_ = edges.size();
}

bool RiskNetwork::has_edge(NodeId from, NodeId to) const {
  return find_edge(from, to) != nullptr;
}

const Edge* RiskNetwork::find_edge(NodeId from, NodeId to) const {
  if (from >= node_count()) return nullptr;
  for (const Edge& e : out_edges_[from]) {
    if (e.target == to) return &e;
  }
  return nullptr;
}

RiskNetwork RiskNetwork::with_capture_probs(std::vector<double> probs) const {
  return RiskNetwork(node_count(), edge_list(), std::move(probs));
}

std::vector<EdgeDef> RiskNetwork::edge_list() const {
  std::vector<EdgeDef> edges;
  edges.reserve(edge_count_);
  for (NodeId v = 0; v < out_edges_.size(); ++v) {
    for (const Edge& e : out_edges_[v]) {
      edges.push_back(EdgeDef{v, e.target, e.travel_time});
    }
  }
  return edges;
}

RiskNetwork build_network(std::size_t node_count,
                          const std::vector<EdgeDef>& edges,
                          std::vector<double> capture_probs) {
  return RiskNetwork(node_count, edges, std::move(capture_probs));
}

EscapePath score_path(const RiskNetwork& network,
                      const std::vector<NodeId>& nodes) {
  if (nodes.empty()) throw InvalidPathError("path is empty");

  EscapePath path;
  path.nodes = nodes;
  std::unordered_set<NodeId> visited;
  visited.reserve(nodes.size() * 2);

  double cost = 0.0;
  double survival = 1.0;
  double time = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const NodeId v = nodes[i];
    if (v >= network.node_count()) {
      throw InvalidPathError("node " + std::to_string(v) +
                             " is not in the network");
    }
    if (!visited.insert(v).second) {
      throw InvalidPathError("node " + std::to_string(v) +
                             " repeats; paths must be simple");
    }
    cost += network.node_risk_cost(v);
    survival *= 1.0 - network.capture_prob(v);
    if (i + 1 < nodes.size()) {
      const Edge* e = network.find_edge(v, nodes[i + 1]);
      if (e == nullptr) {
        throw InvalidPathError("no edge from " + std::to_string(v) + " to " +
                               std::to_string(nodes[i + 1]));
      }
      time += e->travel_time;
    }
  }
  path.risk_cost = cost;
  path.survival_prob = survival;
  path.travel_time = time;
  return path;
}

}  // namespace dpero
