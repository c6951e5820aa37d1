#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "coopsec/geometry.hpp"
#include "coopsec/secrecy.hpp"

namespace coopsec {

enum class Strategy { Direct, CoopTransmit, BestRelay, BestJammer };

/// Parses the CLI names `direct`, `coop-tx`, `best-relay`, `best-jammer`.
/// Throws std::invalid_argument on anything else.
Strategy parse_strategy(std::string_view name);

std::string_view strategy_name(Strategy strategy);

struct StrategyConfig {
  Strategy strategy = Strategy::CoopTransmit;
  ChannelParams channel;
};

/// Friendly nodes split into the designated transmitter and the candidate
/// helpers (relay or jammer, depending on strategy).
struct FriendlyRoles {
  Point designated_tx;
  std::vector<Point> helpers;
};

/// First friendly node transmits, the rest help. Sampled points are
/// exchangeable, so position 0 is as good as a uniform choice. Throws
/// std::invalid_argument on an empty list.
FriendlyRoles assign_roles(std::span<const Point> friendly);

/// Non-cooperative baseline: the designated transmitter alone must be
/// strictly closer to the receiver than to every eavesdropper.
bool eval_direct(const FriendlyRoles& roles, std::span<const Point> eaves,
                 Point receiver, const StrategyConfig& cfg);

/// Every friendly node transmits a block; equivalent to covered().
bool eval_coop_transmit(std::span<const Point> friendly,
                        std::span<const Point> eaves, Point receiver);

/// Direct succeeds, or some helper j jams such that
/// SINR_r(j) > max over eavesdroppers of SINR_e(j), with
/// SINR_x(j) = P_t d_{t,x}^-beta / (sigma^2 + P_j d_{j,x}^-beta).
/// A helper on top of a node saturates that node's SINR to zero.
bool eval_best_jammer(const FriendlyRoles& roles,
                      std::span<const Point> eaves, Point receiver,
                      const StrategyConfig& cfg);

/// Direct succeeds, or some decode-and-forward helper j satisfies
/// min(C(t->j), C(j->r)) > max over eavesdroppers of max(C(t->e), C(j->e)).
/// Zero-distance hops count as infinite capacity.
bool eval_best_relay(const FriendlyRoles& roles,
                     std::span<const Point> eaves, Point receiver,
                     const StrategyConfig& cfg);

/// Dispatches on cfg.strategy; an empty friendly list is never secure.
bool eval_strategy(const StrategyConfig& cfg, std::span<const Point> friendly,
                   std::span<const Point> eaves, Point receiver);

}  // namespace coopsec
