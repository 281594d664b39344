#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "chainsim/deploy.hpp"
#include "chainsim/geometry.hpp"

namespace chainsim {

/// A data-gathering chain over one group of alive nodes.
///
/// `ordered_nodes` is the construction order, end node first. `links` holds
/// the undirected edges laid down during construction; a plain greedy chain
/// links each node to its predecessor, while the IEEPB builder may attach a
/// node to an earlier member and so produce a tree. Once a leader is set,
/// `parent_of` orients every edge toward it.
struct Chain {
  std::vector<NodeId> ordered_nodes;
  std::vector<std::pair<NodeId, NodeId>> links;
  std::map<NodeId, NodeId> parent_of;
  std::optional<NodeId> leader;
  std::set<NodeId> secondary_heads;

  std::size_t size() const noexcept { return ordered_nodes.size(); }
  bool contains(NodeId id) const;
  /// Nodes whose parent is `id`, ascending by id.
  std::vector<NodeId> children_of(NodeId id) const;
};

/// PEGASIS construction: start at the member farthest from `anchor`, then
/// repeatedly append the unconnected member nearest to the chain end.
/// Distance ties go to the lowest node id. Throws on an empty member list.
Chain build_chain_greedy(std::span<const SensorNode> members, Point2D anchor);

/// Greedy construction that refuses long links. A tail link longer than
/// `threshold_mult` times the mean accepted link length is replaced by the
/// shortest link between any chain member and any unconnected node.
Chain build_chain_ieepb(std::span<const SensorNode> members, Point2D anchor,
                        double threshold_mult);

/// Leader weight: residual energy over distance to the sink (J/m).
double node_weight(const SensorNode& node, Point2D sink_pos);

/// Member with the highest weight; ties go to the lowest id.
NodeId select_leader(const Chain& chain, const NodeStore& nodes, Point2D sink_pos);

/// Roots the chain at `leader` and fills `parent_of`.
void set_leader(Chain& chain, NodeId leader);

/// Non-leader members whose parent is at least as far away as the sink.
std::set<NodeId> mark_secondary_heads(const Chain& chain, const NodeStore& nodes,
                                      Point2D sink_pos);

}  // namespace chainsim
