#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "chainsim/config.hpp"
#include "chainsim/geometry.hpp"

namespace chainsim {

/// Seeded generator. Uses mt19937_64 (fully specified by the standard) and
/// converts to doubles by hand because std::uniform_real_distribution is
/// implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) {
    const double v = lo + (hi - lo) * uniform01();
    return v < hi ? v : std::nextafter(hi, lo);
  }

 private:
  std::mt19937_64 engine_;
};

struct SensorNode {
  NodeId id = 0;
  Point2D position;
  double residual_energy = 0.0;
  bool alive = true;
  RegionId region;
};

using NodeStore = std::vector<SensorNode>;

/// Places nodes uniformly at random. MIEEPB gets `nodes_per_region` nodes in
/// each quadrant (region 0 first); baselines scatter `node_count` nodes over
/// the whole field in region 0. Ids follow generation order.
NodeStore deploy_nodes(const SimConfig& config, Rng& rng);

/// Bounds [x0, x1) x [y0, y1) of a quadrant.
struct Rect {
  double x0, y0, x1, y1;
};
Rect region_bounds(RegionId r, const SimConfig& config);

}  // namespace chainsim
