#include "chainsim/deploy.hpp"

namespace chainsim {

Rect region_bounds(RegionId r, const SimConfig& config) {
  const double hw = config.field_width / 2.0;
  const double hh = config.field_height / 2.0;
  const double x0 = r.index >= 2 ? hw : 0.0;
  const double y0 = (r.index % 2) == 1 ? hh : 0.0;
  return Rect{x0, y0, x0 + hw, y0 + hh};
}

NodeStore deploy_nodes(const SimConfig& config, Rng& rng) {
  config.validate();
  NodeStore nodes;
  nodes.reserve(static_cast<std::size_t>(config.node_count));

  auto place = [&](Point2D p, RegionId region) {
    nodes.push_back(SensorNode{static_cast<NodeId>(nodes.size()), p,
                               config.initial_energy, true, region});
  };

  if (config.protocol == Protocol::kMieepb) {
    for (int r = 0; r < RegionId::kCount; ++r) {
      const Rect box = region_bounds(RegionId{r}, config);
      for (int i = 0; i < config.nodes_per_region; ++i) {
        const double x = rng.uniform(box.x0, box.x1);
        const double y = rng.uniform(box.y0, box.y1);
        place({x, y}, RegionId{r});
      }
    }
  } else {
    for (int i = 0; i < config.node_count; ++i) {
      const double x = rng.uniform(0.0, config.field_width);
      const double y = rng.uniform(0.0, config.field_height);
      place({x, y}, RegionId{0});
    }
  }
  return nodes;
}

}  // namespace chainsim
