#include "coopsec/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace coopsec {

double distance(Point p, Point q) { return std::hypot(p.x - q.x, p.y - q.y); }

NearestResult nearest(Point query, std::span<const Point> candidates) {
  if (candidates.empty())
    throw std::invalid_argument("nearest: candidate list is empty");
  NearestResult best{0, distance(query, candidates[0])};
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double d = distance(query, candidates[i]);
    if (d < best.dist) best = {i, d};
  }
  return best;
}

}  // namespace coopsec
