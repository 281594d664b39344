#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "chainsim/energy.hpp"
#include "chainsim/geometry.hpp"

namespace chainsim {

enum class Protocol { kMieepb, kIeepb, kPegasis };

std::string_view to_string(Protocol p) noexcept;

/// Accepts "mieepb", "ieepb" or "pegasis" (case-insensitive).
Protocol parse_protocol(std::string_view text);

/// Simulation parameters. Defaults reproduce the reference scenario: a
/// 100 m x 100 m field, 100 nodes with 0.5 J each, 2000-bit packets.
struct SimConfig {
  double field_width = 100.0;
  double field_height = 100.0;
  int node_count = 100;
  int nodes_per_region = 25;
  int max_rounds = 5000;
  double initial_energy = 0.5;
  Protocol protocol = Protocol::kMieepb;
  std::uint64_t rng_seed = 1;
  Point2D static_bs{0.0, 0.0};
  std::array<Point2D, 4> sojourn_locations{
      {{33.0, 25.0}, {33.0, 75.0}, {66.0, 25.0}, {66.0, 75.0}}};
  /// Sink dwell time per stop. Bookkeeping only.
  double sojourn_time = 1.0;
  /// Long-link threshold multiplier for IEEPB chain construction.
  double threshold_mult = 1.0;
  EnergyParams energy{};

  bool contains(Point2D p) const noexcept;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const;
};

/// Quadrant containing `p`. Coordinates on the split lines belong to the
/// higher-index region. Throws std::invalid_argument when `p` is outside
/// the field.
RegionId region_of(Point2D p, const SimConfig& config);

}  // namespace chainsim
