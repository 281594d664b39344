#include "chainsim/protocols.hpp"

#include <stdexcept>

namespace chainsim {

namespace {

SojournSchedule schedule_for(const SimConfig& config) {
  return config.protocol == Protocol::kMieepb ? sojourn_tour(config) : static_schedule(config);
}

std::vector<SensorNode> alive_members(const NodeStore& nodes, std::optional<RegionId> region) {
  std::vector<SensorNode> out;
  for (const SensorNode& n : nodes) {
    if (n.alive && (!region || n.region == *region)) out.push_back(n);
  }
  return out;
}

StopTrace run_stop(ProtocolState& state, const SojournStop& stop, Chain chain, NodeId leader,
                   bool with_secondary_heads) {
  set_leader(chain, leader);
  if (with_secondary_heads)
    chain.secondary_heads = mark_secondary_heads(chain, state.nodes, stop.location);

  StopTrace trace{stop.region, stop.location, chain.size(), leader,
                  chain.secondary_heads.size(), {}};
  trace.ledger =
      run_chain_pass(chain, state.nodes, stop.location, state.config.energy, stop.region);
  return trace;
}

RoundResult finish_round(ProtocolState& state, std::vector<StopTrace> stops) {
  DeliveryLedger total;
  for (const StopTrace& s : stops) total.merge(s.ledger);

  RoundMetrics m;
  m.round = state.round_index;
  m.alive = state.alive_count();
  m.dead_cumulative = static_cast<int>(state.nodes.size()) - m.alive;
  m.residual_total = state.residual_total();
  m.energy_spent = total.energy_spent;
  m.bits_to_sink = total.bits_to_sink();
  m.packets_to_sink = total.packets_to_sink;
  m.bits_by_region = total.bits_to_sink_by_region;

  ++state.round_index;
  return RoundResult{m, std::move(stops)};
}

void require_alive(const ProtocolState& state) {
  if (state.alive_count() == 0) throw std::logic_error("no alive nodes left");
}

}  // namespace

ProtocolState::ProtocolState(SimConfig cfg)
    : config(cfg), schedule(schedule_for(cfg)), rng(cfg.rng_seed) {
  nodes = deploy_nodes(config, rng);
}

ProtocolState::ProtocolState(SimConfig cfg, NodeStore deployed)
    : config(cfg), nodes(std::move(deployed)), schedule(schedule_for(cfg)), rng(cfg.rng_seed) {
  config.validate();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id != static_cast<NodeId>(i))
      throw std::invalid_argument("node ids must match their store index");
  }
}

int ProtocolState::alive_count() const noexcept {
  int n = 0;
  for (const SensorNode& node : nodes) n += node.alive ? 1 : 0;
  return n;
}

double ProtocolState::residual_total() const noexcept {
  double sum = 0.0;
  for (const SensorNode& node : nodes) sum += node.residual_energy;
  return sum;
}

bool ProtocolState::finished() const noexcept {
  return round_index >= config.max_rounds || alive_count() == 0;
}

RoundResult mieepb_round(ProtocolState& state) {
  require_alive(state);
  std::vector<StopTrace> stops;
  for (const SojournStop& stop : state.schedule.stops) {
    const auto members = alive_members(state.nodes, stop.region);
    if (members.empty()) {
      stops.push_back(StopTrace{stop.region, stop.location, 0, std::nullopt, 0, {}});
      continue;
    }
    Chain chain = build_chain_greedy(members, stop.location);
    const NodeId leader = select_leader(chain, state.nodes, stop.location);
    stops.push_back(run_stop(state, stop, std::move(chain), leader, true));
  }
  return finish_round(state, std::move(stops));
}

RoundResult ieepb_round(ProtocolState& state) {
  require_alive(state);
  const SojournStop& stop = state.schedule.stops.front();
  const auto members = alive_members(state.nodes, std::nullopt);
  Chain chain = build_chain_ieepb(members, stop.location, state.config.threshold_mult);
  const NodeId leader = select_leader(chain, state.nodes, stop.location);
  std::vector<StopTrace> stops;
  stops.push_back(run_stop(state, stop, std::move(chain), leader, false));
  return finish_round(state, std::move(stops));
}

RoundResult pegasis_round(ProtocolState& state) {
  require_alive(state);
  const SojournStop& stop = state.schedule.stops.front();
  const auto members = alive_members(state.nodes, std::nullopt);
  Chain chain = build_chain_greedy(members, stop.location);
  const std::size_t slot = static_cast<std::size_t>(state.round_index) % chain.size();
  const NodeId leader = chain.ordered_nodes[slot];
  std::vector<StopTrace> stops;
  stops.push_back(run_stop(state, stop, std::move(chain), leader, false));
  return finish_round(state, std::move(stops));
}

std::optional<RoundResult> run_round(ProtocolState& state) {
  if (state.finished()) return std::nullopt;
  switch (state.config.protocol) {
    case Protocol::kMieepb: return mieepb_round(state);
    case Protocol::kIeepb: return ieepb_round(state);
    case Protocol::kPegasis: return pegasis_round(state);
  }
  return std::nullopt;
}

std::vector<RoundMetrics> run_simulation(const SimConfig& config) {
  ProtocolState state{config};
  std::vector<RoundMetrics> rows;
  rows.reserve(static_cast<std::size_t>(config.max_rounds));
  while (auto result = run_round(state)) rows.push_back(result->metrics);
  return rows;
}

}  // namespace chainsim
