#pragma once

#include <cstdint>

namespace chainsim {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

/// Euclidean distance in meters.
double distance(Point2D a, Point2D b) noexcept;

/// One of the four field quadrants. Baseline protocols put every node in
/// region 0.
struct RegionId {
  int index = 0;

  static constexpr int kCount = 4;

  friend bool operator==(const RegionId&, const RegionId&) = default;
  friend auto operator<=>(const RegionId&, const RegionId&) = default;
};

using NodeId = std::int32_t;

}  // namespace chainsim
