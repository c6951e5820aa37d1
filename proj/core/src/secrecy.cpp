#include "coopsec/secrecy.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace coopsec {

void ChannelParams::validate() const {
  if (!(power > 0.0) || !std::isfinite(power)) {
    throw std::invalid_argument("channel: power must be positive");
  }
  if (!(noise_var > 0.0) || !std::isfinite(noise_var)) {
    throw std::invalid_argument("channel: noise variance must be positive");
  }
  if (!(beta >= 2.0 && beta <= 6.0)) {
    throw std::invalid_argument("channel: path-loss exponent must lie in "
                                "[2, 6], got " + std::to_string(beta));
  }
  if (!(jammer_power >= 0.0) || !std::isfinite(jammer_power)) {
    throw std::invalid_argument("channel: jammer power must be nonnegative");
  }
}

double capacity(const ChannelParams& params, double dist) {
  if (!(dist > 0.0)) {
    throw std::domain_error("capacity: diverges at zero distance");
  }
  return 0.5 * std::log2(1.0 + params.power * std::pow(dist, -params.beta) /
                                   params.noise_var);
}

double secrecy_capacity(double c_main, double c_eve) {
  return std::max(c_main - c_eve, 0.0);
}

double secrecy_disk_radius(Point t, std::span<const Point> eavesdroppers) {
  double radius = std::numeric_limits<double>::infinity();
  for (const auto& e : eavesdroppers) {
    radius = std::min(radius, distance(t, e));
  }
  return radius;
}

bool covered(std::span<const Point> transmitters,
             std::span<const Point> eavesdroppers, Point receiver) {
  for (const auto& t : transmitters) {
    const double d_tr = distance(t, receiver);
    bool exposed = false;
    for (const auto& e : eavesdroppers) {
      if (distance(t, e) <= d_tr) {
        exposed = true;
        break;
      }
    }
    if (!exposed) return true;
  }
  return false;
}

bool covered(const Deployment& d) {
  return covered(d.transmitters, d.eavesdroppers, d.receiver);
}

}  // namespace coopsec
