#include "chainsim/mobility.hpp"

#include <stdexcept>

namespace chainsim {

SojournSchedule sojourn_tour(const SimConfig& config) {
  SojournSchedule schedule;
  bool covered[RegionId::kCount] = {};
  for (const Point2D& loc : config.sojourn_locations) {
    const RegionId r = region_of(loc, config);
    if (covered[r.index])
      throw std::invalid_argument("two sojourn locations fall in the same region");
    covered[r.index] = true;
    schedule.stops.push_back(SojournStop{loc, r, config.sojourn_time});
  }
  schedule.total_time = total_sojourn_time(schedule);
  return schedule;
}

SojournSchedule static_schedule(const SimConfig& config) {
  SojournSchedule schedule;
  schedule.stops.push_back(SojournStop{config.static_bs, RegionId{0}, config.sojourn_time});
  schedule.total_time = total_sojourn_time(schedule);
  return schedule;
}

double total_sojourn_time(const SojournSchedule& schedule) noexcept {
  double sum = 0.0;
  for (const SojournStop& s : schedule.stops) sum += s.tau;
  return sum;
}

Point2D sink_position_for_region(const SojournSchedule& schedule, RegionId r) {
  for (const SojournStop& s : schedule.stops) {
    if (s.region == r) return s.location;
  }
  throw std::invalid_argument("no sojourn stop serves the requested region");
}

}  // namespace chainsim
