#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "chainsim/config.hpp"
#include "chainsim/energy.hpp"
#include "chainsim/geometry.hpp"

namespace chainsim {

/// Network state at the end of one round.
struct RoundMetrics {
  int round = 0;
  int alive = 0;
  int dead_cumulative = 0;
  double residual_total = 0.0;
  double energy_spent = 0.0;
  Bits bits_to_sink = 0;
  long long packets_to_sink = 0;
  std::array<Bits, RegionId::kCount> bits_by_region{};
};

struct SummaryMetrics {
  /// Round whose pass killed the first node; empty if nobody died.
  std::optional<int> first_death_round;
  /// Round in which the last node died; empty if the network outlived the run.
  std::optional<int> last_death_round;
  /// last - first when both exist, otherwise 0.
  int instability_period = 0;
  long long total_packets = 0;
  /// Cumulative energy spent over total initial energy, one entry per round
  /// up to and including the last death.
  std::vector<double> normalized_avg_energy_per_round;
};

/// Folds per-round rows into whole-run figures. Rows must be non-empty and
/// numbered contiguously from 0; throws std::invalid_argument otherwise.
SummaryMetrics summarize(std::span<const RoundMetrics> rows, const SimConfig& config);

/// Lifetime with a network that outlives the run counted as `max_rounds`.
int lifetime_or_censored(const SummaryMetrics& s, const SimConfig& config) noexcept;

}  // namespace chainsim
