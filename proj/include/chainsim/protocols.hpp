#pragma once

#include <optional>
#include <vector>

#include "chainsim/chain.hpp"
#include "chainsim/config.hpp"
#include "chainsim/deploy.hpp"
#include "chainsim/metrics.hpp"
#include "chainsim/mobility.hpp"
#include "chainsim/transmission.hpp"

namespace chainsim {

/// Everything one simulation run owns.
struct ProtocolState {
  SimConfig config;
  NodeStore nodes;
  int round_index = 0;
  SojournSchedule schedule;
  Rng rng;

  /// Deploys a fresh network from `config.rng_seed`.
  explicit ProtocolState(SimConfig config);
  /// Uses a caller-supplied network (tests, replays).
  ProtocolState(SimConfig config, NodeStore nodes);

  int alive_count() const noexcept;
  double residual_total() const noexcept;
  bool finished() const noexcept;
};

/// One sink stop within a round, for inspection.
struct StopTrace {
  RegionId region;
  Point2D sink;
  std::size_t chain_size = 0;
  std::optional<NodeId> leader;
  std::size_t secondary_heads = 0;
  DeliveryLedger ledger;
};

struct RoundResult {
  RoundMetrics metrics;
  std::vector<StopTrace> stops;
};

/// Four per-region greedy chains, weight-elected leaders, secondary heads,
/// and the sink visiting each region's sojourn location in turn.
RoundResult mieepb_round(ProtocolState& state);

/// One long-link-avoiding chain, weight-elected leader, static sink.
RoundResult ieepb_round(ProtocolState& state);

/// One greedy chain whose leader rotates through the chain by round index.
RoundResult pegasis_round(ProtocolState& state);

/// Dispatches on `state.config.protocol`. Returns empty once every node is
/// dead or `max_rounds` rounds have run.
std::optional<RoundResult> run_round(ProtocolState& state);

/// Steps to completion and returns one row per round.
std::vector<RoundMetrics> run_simulation(const SimConfig& config);

}  // namespace chainsim
