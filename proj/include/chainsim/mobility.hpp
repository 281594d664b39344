#pragma once

#include <vector>

#include "chainsim/config.hpp"
#include "chainsim/geometry.hpp"

namespace chainsim {

struct SojournStop {
  Point2D location;
  RegionId region;
  double tau = 0.0;  // sojourn time at this stop
};

/// The sink's fixed tour. Identical every round.
struct SojournSchedule {
  std::vector<SojournStop> stops;
  double total_time = 0.0;
};

/// Mobile-sink tour: one stop per configured sojourn location in listed
/// order, each tied to the quadrant containing it, equal dwell time per stop.
/// Throws std::invalid_argument if two locations share a quadrant.
SojournSchedule sojourn_tour(const SimConfig& config);

/// Single-stop schedule at the static base station, region 0.
SojournSchedule static_schedule(const SimConfig& config);

double total_sojourn_time(const SojournSchedule& schedule) noexcept;

/// Throws std::invalid_argument when no stop serves region `r`.
Point2D sink_position_for_region(const SojournSchedule& schedule, RegionId r);

}  // namespace chainsim
