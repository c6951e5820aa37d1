#pragma once

#include <span>
#include <vector>

#include "coopsec/geometry.hpp"

namespace coopsec {

/// AWGN channel model shared by every transmitter.
struct ChannelParams {
  double power = 1.0;        // P_t, linear units
  double noise_var = 1.0;    // sigma^2 at receiver and eavesdroppers
  double beta = 4.0;         // path-loss exponent
  double jammer_power = 1.0; // P_j, used by the jamming strategy only

  /// Throws std::invalid_argument unless power > 0, noise_var > 0,
  /// beta in [2, 6], jammer_power >= 0.
  void validate() const;
};

struct Deployment {
  std::vector<Point> transmitters;
  std::vector<Point> eavesdroppers;
  Point receiver;
};

/// Point-to-point AWGN capacity (1/2) log2(1 + power * dist^-beta /
/// noise_var) in bits per channel use. Throws std::domain_error at
/// dist <= 0, where the model diverges.
double capacity(const ChannelParams& params, double dist);

/// max(c_main - c_eve, 0).
double secrecy_capacity(double c_main, double c_eve);

/// Distance from t to its nearest eavesdropper; +infinity when none exist.
double secrecy_disk_radius(Point t, std::span<const Point> eavesdroppers);

/// True iff some transmitter is strictly closer to the receiver than to
/// every eavesdropper (the receiver sits strictly inside that transmitter's
/// secrecy disk). Ties do not count. No transmitters: false. No
/// eavesdroppers with at least one transmitter: true.
bool covered(std::span<const Point> transmitters,
             std::span<const Point> eavesdroppers, Point receiver);

bool covered(const Deployment& d);

}  // namespace coopsec
