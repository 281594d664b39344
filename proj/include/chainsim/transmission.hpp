#pragma once

#include <array>
#include <vector>

#include "chainsim/chain.hpp"
#include "chainsim/deploy.hpp"
#include "chainsim/energy.hpp"
#include "chainsim/geometry.hpp"

namespace chainsim {

/// What one chain pass (or a merge of several) delivered and spent.
struct DeliveryLedger {
  std::array<Bits, RegionId::kCount> bits_to_sink_by_region{};
  long long packets_to_sink = 0;
  double energy_spent = 0.0;
  std::vector<NodeId> deaths;

  Bits bits_to_sink() const noexcept;
  void merge(const DeliveryLedger& other);
};

/// Order in which chain members send: every node after all of its children,
/// siblings by ascending id, leader last.
std::vector<NodeId> token_order(const Chain& chain);

/// Runs one data-collection pass over `chain` while the sink sits at
/// `sink_pos`, charging energy on `nodes` in place. Deliveries are credited
/// to `region`.
///
/// Each member aggregates what its children sent (agg_cost on the received
/// bits), then transmits the aggregate either to its parent, which pays
/// rx_cost, or straight to the sink if it is the leader or a secondary head.
/// The sink receives for free. A node that cannot pay a charge in full
/// spends what it has, the action fails and the node dies; it takes no
/// further part in the pass, and data sent to it afterwards is lost.
///
/// Throws std::invalid_argument if the chain has no leader or references a
/// dead or unknown node.
DeliveryLedger run_chain_pass(const Chain& chain, NodeStore& nodes, Point2D sink_pos,
                              const EnergyParams& p, RegionId region = RegionId{0});

}  // namespace chainsim
