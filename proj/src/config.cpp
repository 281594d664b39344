#include "chainsim/config.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace chainsim {

std::string_view to_string(Protocol p) noexcept {
  switch (p) {
    case Protocol::kMieepb: return "mieepb";
    case Protocol::kIeepb: return "ieepb";
    case Protocol::kPegasis: return "pegasis";
  }
  return "mieepb";
}

Protocol parse_protocol(std::string_view text) {
  std::string lower{text};
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "mieepb") return Protocol::kMieepb;
  if (lower == "ieepb") return Protocol::kIeepb;
  if (lower == "pegasis") return Protocol::kPegasis;
  throw std::invalid_argument("unknown protocol: " + std::string{text});
}

bool SimConfig::contains(Point2D p) const noexcept {
  return p.x >= 0.0 && p.x <= field_width && p.y >= 0.0 && p.y <= field_height;
}

void SimConfig::validate() const {
  if (!(field_width > 0.0) || !(field_height > 0.0))
    throw std::invalid_argument("field dimensions must be positive");
  if (node_count <= 0) throw std::invalid_argument("node_count must be positive");
  if (max_rounds < 0) throw std::invalid_argument("max_rounds must be non-negative");
  if (!(initial_energy > 0.0)) throw std::invalid_argument("initial_energy must be positive");
  if (!(threshold_mult > 0.0)) throw std::invalid_argument("threshold_mult must be positive");
  if (!(sojourn_time >= 0.0)) throw std::invalid_argument("sojourn_time must be non-negative");
  if (protocol == Protocol::kMieepb && node_count != nodes_per_region * RegionId::kCount)
    throw std::invalid_argument("node_count must equal 4 x nodes_per_region for MIEEPB");
  if (!contains(static_bs)) throw std::invalid_argument("static BS lies outside the field");
  for (const Point2D& loc : sojourn_locations) {
    if (!contains(loc)) throw std::invalid_argument("sojourn location lies outside the field");
  }
  energy.validate();
}

RegionId region_of(Point2D p, const SimConfig& config) {
  if (!config.contains(p)) throw std::invalid_argument("point lies outside the field");
  const bool right = p.x >= config.field_width / 2.0;
  const bool upper = p.y >= config.field_height / 2.0;
  return RegionId{(right ? 2 : 0) + (upper ? 1 : 0)};
}

}  // namespace chainsim
