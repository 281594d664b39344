#include <doctest.h>

#include <set>

#include "chainsim/protocols.hpp"
#include "oracles.hpp"

using namespace chainsim;

namespace {

SimConfig config_for(Protocol p, std::uint64_t seed = 1) {
  SimConfig c;
  c.protocol = p;
  c.rng_seed = seed;
  return c;
}

}  // namespace

TEST_CASE("first MIEEPB round builds four 25-node chains") {
  ProtocolState state{config_for(Protocol::kMieepb)};
  const RoundResult r = mieepb_round(state);
  REQUIRE(r.stops.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(r.stops[i].chain_size == 25);
    CHECK(r.stops[i].region == RegionId{static_cast<int>(i)});
    CHECK(r.stops[i].leader.has_value());
    CHECK(r.stops[i].ledger.packets_to_sink == 1 + static_cast<long long>(r.stops[i].secondary_heads));
  }
  CHECK(r.metrics.round == 0);
  CHECK(r.metrics.alive == 100);
  CHECK(r.metrics.packets_to_sink >= 4);
  CHECK(state.round_index == 1);
}

TEST_CASE("MIEEPB leader maximises weight against the region's sojourn location") {
  ProtocolState state{config_for(Protocol::kMieepb, 9)};
  for (int round = 0; round < 5; ++round) {
    // Leaders are elected before any energy is spent in the stop.
    std::vector<NodeId> expected;
    for (const SojournStop& stop : state.schedule.stops) {
      std::vector<SensorNode> members;
      for (const auto& n : state.nodes)
        if (n.alive && n.region == stop.region) members.push_back(n);
      expected.push_back(oracle::best_weight(members, stop.location));
    }
    const RoundResult r = mieepb_round(state);
    for (std::size_t i = 0; i < 4; ++i) CHECK(r.stops[i].leader == expected[i]);
  }
}

TEST_CASE("an empty region is still visited") {
  ProtocolState state{config_for(Protocol::kMieepb)};
  for (auto& n : state.nodes) {
    if (n.region == RegionId{1}) {
      n.alive = false;
      n.residual_energy = 0.0;
    }
  }
  const RoundResult r = mieepb_round(state);
  REQUIRE(r.stops.size() == 4);
  CHECK(r.stops[1].chain_size == 0);
  CHECK(r.stops[1].ledger.bits_to_sink() == 0);
  CHECK(r.metrics.bits_by_region[1] == 0);
  int chains = 0;
  for (const auto& s : r.stops) chains += s.chain_size > 0 ? 1 : 0;
  CHECK(chains == 3);
}

TEST_CASE("IEEPB round: one 100-node chain, weighted leader, no secondary heads") {
  ProtocolState state{config_for(Protocol::kIeepb, 4)};
  for (int round = 0; round < 20; ++round) {
    std::vector<SensorNode> alive;
    for (const auto& n : state.nodes)
      if (n.alive) alive.push_back(n);
    const RoundResult r = ieepb_round(state);
    REQUIRE(r.stops.size() == 1);
    CHECK(r.stops[0].chain_size == alive.size());
    CHECK(r.stops[0].sink == Point2D{0, 0});
    CHECK(r.stops[0].leader == oracle::best_weight(alive, {0, 0}));
    CHECK(r.stops[0].secondary_heads == 0);
    CHECK(r.metrics.packets_to_sink == 1);
    CHECK(r.metrics.bits_by_region[1] + r.metrics.bits_by_region[2] + r.metrics.bits_by_region[3] == 0);
  }
}

TEST_CASE("PEGASIS leader rotates through chain positions") {
  ProtocolState state{config_for(Protocol::kPegasis, 2)};
  std::optional<NodeId> previous;
  for (int round = 0; round < 30; ++round) {
    std::vector<SensorNode> alive;
    for (const auto& n : state.nodes)
      if (n.alive) alive.push_back(n);
    const auto order = oracle::greedy_order(alive, state.config.static_bs);
    const RoundResult r = pegasis_round(state);
    const NodeId expected = order[static_cast<std::size_t>(round) % order.size()];
    CHECK(r.stops[0].leader == expected);
    CHECK(r.stops[0].secondary_heads == 0);
    CHECK(r.metrics.packets_to_sink == 1);
    if (previous) CHECK(*previous != expected);
    previous = expected;
  }
}

TEST_CASE("PEGASIS with one alive node always elects it") {
  SimConfig c = config_for(Protocol::kPegasis);
  c.node_count = 1;
  ProtocolState state{c, NodeStore{SensorNode{0, {50, 50}, 0.5, true, RegionId{0}}}};
  for (int round = 0; round < 3; ++round) CHECK(pegasis_round(state).stops[0].leader == 0);
}

TEST_CASE("run_round stops at max_rounds and when everyone is dead") {
  SimConfig c = config_for(Protocol::kIeepb);
  c.max_rounds = 3;
  ProtocolState state{c};
  int rounds = 0;
  while (run_round(state)) ++rounds;
  CHECK(rounds == 3);
  CHECK(state.round_index == 3);

  SimConfig tiny = config_for(Protocol::kPegasis);
  tiny.initial_energy = 2e-4;
  const auto rows = run_simulation(tiny);
  REQUIRE_FALSE(rows.empty());
  CHECK(rows.back().alive == 0);
  CHECK(static_cast<int>(rows.size()) < tiny.max_rounds);
}

TEST_CASE("a round where nobody can afford to transmit kills nodes") {
  SimConfig c = config_for(Protocol::kMieepb);
  c.initial_energy = 1e-9;
  ProtocolState state{c};
  const RoundResult r = mieepb_round(state);
  CHECK(r.metrics.alive < 100);
}

TEST_CASE("identical seeds give identical metric streams") {
  for (Protocol p : {Protocol::kMieepb, Protocol::kIeepb, Protocol::kPegasis}) {
    SimConfig c = config_for(p, 13);
    c.max_rounds = 300;
    const auto a = run_simulation(c);
    const auto b = run_simulation(c);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].residual_total == b[i].residual_total);
      CHECK(a[i].bits_to_sink == b[i].bits_to_sink);
    }
  }
}

TEST_CASE("chain size bounds and coverage over a long run") {
  for (Protocol p : {Protocol::kMieepb, Protocol::kIeepb, Protocol::kPegasis}) {
    SimConfig c = config_for(p, 21);
    c.max_rounds = 2500;
    ProtocolState state{c};
    int prev_alive = state.alive_count();
    while (true) {
      const int alive_before = state.alive_count();
      auto r = run_round(state);
      if (!r) break;
      std::size_t covered = 0;
      for (const auto& s : r->stops) {
        if (p == Protocol::kMieepb) CHECK(s.chain_size <= 25);
        covered += s.chain_size;
      }
      CHECK(covered == static_cast<std::size_t>(alive_before));
      CHECK(r->metrics.alive <= prev_alive);
      CHECK(r->metrics.alive + r->metrics.dead_cumulative == 100);
      prev_alive = r->metrics.alive;
    }
  }
}
