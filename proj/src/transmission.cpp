#include "chainsim/transmission.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace chainsim {

namespace {

/// Deducts `cost` from `node`. On shortfall the node spends what it has and
/// dies. Returns whether the charge was paid in full.
bool charge(SensorNode& node, double cost, DeliveryLedger& ledger) {
  if (cost <= node.residual_energy) {
    node.residual_energy -= cost;
    ledger.energy_spent += cost;
    if (node.residual_energy <= 0.0) {
      node.residual_energy = 0.0;
      node.alive = false;
      ledger.deaths.push_back(node.id);
    }
    return true;
  }
  ledger.energy_spent += node.residual_energy;
  node.residual_energy = 0.0;
  node.alive = false;
  ledger.deaths.push_back(node.id);
  return false;
}

}  // namespace

Bits DeliveryLedger::bits_to_sink() const noexcept {
  Bits sum = 0;
  for (Bits b : bits_to_sink_by_region) sum += b;
  return sum;
}

void DeliveryLedger::merge(const DeliveryLedger& other) {
  for (std::size_t r = 0; r < bits_to_sink_by_region.size(); ++r)
    bits_to_sink_by_region[r] += other.bits_to_sink_by_region[r];
  packets_to_sink += other.packets_to_sink;
  energy_spent += other.energy_spent;
  deaths.insert(deaths.end(), other.deaths.begin(), other.deaths.end());
}

std::vector<NodeId> token_order(const Chain& chain) {
  if (!chain.leader) throw std::invalid_argument("chain has no leader");
  std::map<NodeId, std::vector<NodeId>> children;
  for (const auto& [child, parent] : chain.parent_of) children[parent].push_back(child);

  std::vector<NodeId> order;
  order.reserve(chain.size());
  // Iterative post-order; chains can be deep enough to make recursion a
  // poor fit.
  struct Frame {
    NodeId node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{*chain.leader, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    const auto it = children.find(top.node);
    if (it != children.end() && top.next_child < it->second.size()) {
      const NodeId child = it->second[top.next_child++];
      stack.push_back({child, 0});
    } else {
      order.push_back(top.node);
      stack.pop_back();
    }
  }
  return order;
}

DeliveryLedger run_chain_pass(const Chain& chain, NodeStore& nodes, Point2D sink_pos,
                              const EnergyParams& p, RegionId region) {
  if (!chain.leader) throw std::invalid_argument("chain has no leader");
  for (NodeId id : chain.ordered_nodes) {
    if (id < 0 || static_cast<std::size_t>(id) >= nodes.size())
      throw std::invalid_argument("chain references an unknown node");
    if (!nodes[static_cast<std::size_t>(id)].alive)
      throw std::invalid_argument("chain references a dead node");
  }

  DeliveryLedger ledger;
  std::map<NodeId, Bits> received;

  for (NodeId id : token_order(chain)) {
    SensorNode& node = nodes[static_cast<std::size_t>(id)];
    if (!node.alive) continue;

    const Bits in = received[id];
    if (!charge(node, agg_cost(in, p), ledger)) continue;
    const Bits payload = aggregate_bits(p.packet_bits, in, p);

    const bool to_sink = id == *chain.leader || chain.secondary_heads.contains(id);
    if (to_sink) {
      if (!charge(node, tx_cost(payload, distance(node.position, sink_pos), p), ledger))
        continue;
      ledger.bits_to_sink_by_region[static_cast<std::size_t>(region.index)] += payload;
      ++ledger.packets_to_sink;
      continue;
    }

    SensorNode& parent = nodes[static_cast<std::size_t>(chain.parent_of.at(id))];
    if (!charge(node, tx_cost(payload, distance(node.position, parent.position), p), ledger))
      continue;
    if (!parent.alive) continue;
    if (charge(parent, rx_cost(payload, p), ledger)) received[parent.id] += payload;
  }
  return ledger;
}

}  // namespace chainsim
