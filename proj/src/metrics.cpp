#include "chainsim/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainsim {

SummaryMetrics summarize(std::span<const RoundMetrics> rows, const SimConfig& config) {
  if (rows.empty()) throw std::invalid_argument("no rounds to summarize");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].round != static_cast<int>(i))
      throw std::invalid_argument("round numbers must be contiguous from 0");
  }

  SummaryMetrics s;
  const double total_initial = static_cast<double>(config.node_count) * config.initial_energy;
  double spent = 0.0;
  for (const RoundMetrics& row : rows) {
    if (!s.first_death_round && row.dead_cumulative > 0) s.first_death_round = row.round;
    spent += row.energy_spent;
    s.total_packets += row.packets_to_sink;
    s.normalized_avg_energy_per_round.push_back(std::min(1.0, spent / total_initial));
    if (row.alive == 0) {
      s.last_death_round = row.round;
      break;
    }
  }
  if (s.first_death_round && s.last_death_round)
    s.instability_period = *s.last_death_round - *s.first_death_round;
  return s;
}

int lifetime_or_censored(const SummaryMetrics& s, const SimConfig& config) noexcept {
  return s.last_death_round.value_or(config.max_rounds);
}

}  // namespace chainsim
