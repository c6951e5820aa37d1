#pragma once

#include <cstddef>
#include <span>

namespace coopsec {

/// Planar point, coordinates in region units.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

/// The study region. Only the unit square [0,1]x[0,1] is supported; its
/// area is normalised to 1. Distances are plain Euclidean, no wrap-around.
struct Region {
  enum class Kind { UnitSquare };

  Kind kind = Kind::UnitSquare;

  double area() const { return 1.0; }
  bool contains(Point p) const {
    return p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0;
  }
};

/// Euclidean distance between p and q.
double distance(Point p, Point q);

struct NearestResult {
  std::size_t index = 0;
  double dist = 0.0;
};

/// Index and distance of the candidate closest to query; ties break towards
/// the lowest index. Throws std::invalid_argument on an empty candidate list.
NearestResult nearest(Point query, std::span<const Point> candidates);

}  // namespace coopsec
