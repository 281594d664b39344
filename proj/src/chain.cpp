#include "chainsim/chain.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace chainsim {

namespace {

std::vector<const SensorNode*> sorted_by_id(std::span<const SensorNode> members) {
  if (members.empty()) throw std::invalid_argument("cannot build a chain from no members");
  std::vector<const SensorNode*> out;
  out.reserve(members.size());
  for (const SensorNode& n : members) {
    if (!n.alive) throw std::invalid_argument("chain members must be alive");
    out.push_back(&n);
  }
  std::sort(out.begin(), out.end(),
            [](const SensorNode* a, const SensorNode* b) { return a->id < b->id; });
  return out;
}

std::size_t farthest_from(const std::vector<const SensorNode*>& nodes, Point2D anchor) {
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double d = distance(nodes[i]->position, anchor);
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

}  // namespace

bool Chain::contains(NodeId id) const {
  return std::find(ordered_nodes.begin(), ordered_nodes.end(), id) != ordered_nodes.end();
}

std::vector<NodeId> Chain::children_of(NodeId id) const {
  std::vector<NodeId> out;
  for (const auto& [child, parent] : parent_of) {
    if (parent == id) out.push_back(child);
  }
  return out;  // map iteration is already ascending
}

Chain build_chain_greedy(std::span<const SensorNode> members, Point2D anchor) {
  const auto nodes = sorted_by_id(members);
  const std::size_t n = nodes.size();
  std::vector<bool> used(n, false);

  Chain chain;
  chain.ordered_nodes.reserve(n);
  std::size_t tail = farthest_from(nodes, anchor);
  used[tail] = true;
  chain.ordered_nodes.push_back(nodes[tail]->id);

  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double d = distance(nodes[tail]->position, nodes[i]->position);
      if (d < best) {
        best = d;
        next = i;
      }
    }
    used[next] = true;
    chain.links.emplace_back(nodes[tail]->id, nodes[next]->id);
    chain.ordered_nodes.push_back(nodes[next]->id);
    tail = next;
  }
  return chain;
}

Chain build_chain_ieepb(std::span<const SensorNode> members, Point2D anchor,
                        double threshold_mult) {
  if (!(threshold_mult > 0.0)) throw std::invalid_argument("threshold_mult must be positive");
  const auto nodes = sorted_by_id(members);
  const std::size_t n = nodes.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<bool> used(n, false);
  // For each unconnected node, its nearest chain member.
  std::vector<double> attach_d(n, kInf);
  std::vector<std::size_t> attach_to(n, n);

  auto connect = [&](std::size_t m) {
    used[m] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double d = distance(nodes[m]->position, nodes[i]->position);
      if (d < attach_d[i] || (d == attach_d[i] && nodes[m]->id < nodes[attach_to[i]]->id)) {
        attach_d[i] = d;
        attach_to[i] = m;
      }
    }
  };

  Chain chain;
  chain.ordered_nodes.reserve(n);
  std::size_t tail = farthest_from(nodes, anchor);
  connect(tail);
  chain.ordered_nodes.push_back(nodes[tail]->id);

  double link_sum = 0.0;
  std::size_t link_count = 0;

  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    double next_d = kInf;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double d = distance(nodes[tail]->position, nodes[i]->position);
      if (d < next_d) {
        next_d = d;
        next = i;
      }
    }
    std::size_t from = tail;

    const bool have_mean = link_count > 0;
    const double limit =
        have_mean ? threshold_mult * link_sum / static_cast<double>(link_count) : kInf;
    if (next_d > limit) {
      // Long link: take the shortest available edge into the chain instead.
      double best = kInf;
      for (std::size_t i = 0; i < n; ++i) {
        if (used[i]) continue;
        if (attach_d[i] < best) {
          best = attach_d[i];
          next = i;
        }
      }
      from = attach_to[next];
      next_d = best;
    }

    chain.links.emplace_back(nodes[from]->id, nodes[next]->id);
    chain.ordered_nodes.push_back(nodes[next]->id);
    link_sum += next_d;
    ++link_count;
    connect(next);
    tail = next;
  }
  return chain;
}

double node_weight(const SensorNode& node, Point2D sink_pos) {
  const double d = distance(node.position, sink_pos);
  if (!(d > 0.0)) throw std::invalid_argument("node is co-located with the sink");
  return node.residual_energy / d;
}

NodeId select_leader(const Chain& chain, const NodeStore& nodes, Point2D sink_pos) {
  if (chain.ordered_nodes.empty()) throw std::invalid_argument("empty chain has no leader");
  NodeId best_id = -1;
  double best_q = -1.0;
  for (NodeId id : chain.ordered_nodes) {
    const double q = node_weight(nodes.at(static_cast<std::size_t>(id)), sink_pos);
    if (q > best_q || (q == best_q && id < best_id)) {
      best_q = q;
      best_id = id;
    }
  }
  return best_id;
}

void set_leader(Chain& chain, NodeId leader) {
  if (!chain.contains(leader)) throw std::invalid_argument("leader is not a chain member");
  std::map<NodeId, std::vector<NodeId>> adjacent;
  for (const auto& [a, b] : chain.links) {
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  chain.parent_of.clear();
  chain.secondary_heads.clear();
  chain.leader = leader;

  std::set<NodeId> seen{leader};
  std::deque<NodeId> frontier{leader};
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop_front();
    for (NodeId w : adjacent[v]) {
      if (seen.insert(w).second) {
        chain.parent_of[w] = v;
        frontier.push_back(w);
      }
    }
  }
}

std::set<NodeId> mark_secondary_heads(const Chain& chain, const NodeStore& nodes,
                                      Point2D sink_pos) {
  if (!chain.leader) throw std::invalid_argument("chain has no leader");
  std::set<NodeId> heads;
  for (const auto& [child, parent] : chain.parent_of) {
    if (child == *chain.leader) continue;
    const Point2D pos = nodes.at(static_cast<std::size_t>(child)).position;
    const double d_parent = distance(pos, nodes.at(static_cast<std::size_t>(parent)).position);
    const double d_sink = distance(pos, sink_pos);
    if (d_parent >= d_sink) heads.insert(child);
  }
  return heads;
}

}  // namespace chainsim
