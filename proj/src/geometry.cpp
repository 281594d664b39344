#include "chainsim/geometry.hpp"

#include <cmath>

namespace chainsim {

double distance(Point2D a, Point2D b) noexcept {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace chainsim
