#include "coopsec/strategies.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace coopsec {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// SINR at `node` when `tx` transmits and `jammer` jams. A jammer sitting on
// the node (or close enough that its received power overflows) saturates the
// node: SINR 0.
double sinr_at(Point node, Point tx, Point jammer,
               const ChannelParams& ch) {
  double jam = 0.0;
  if (ch.jammer_power > 0.0) {
    const double d_jam = distance(jammer, node);
    if (d_jam == 0.0) return 0.0;
    jam = ch.jammer_power * std::pow(d_jam, -ch.beta);
    if (std::isinf(jam)) return 0.0;
  }
  const double signal = ch.power * std::pow(distance(tx, node), -ch.beta);
  return signal / (ch.noise_var + jam);
}

double capacity_or_inf(const ChannelParams& ch, Point a, Point b) {
  const double d = distance(a, b);
  return d == 0.0 ? kInf : capacity(ch, d);
}

}  // namespace

Strategy parse_strategy(std::string_view name) {
  if (name == "direct") return Strategy::Direct;
  if (name == "coop-tx") return Strategy::CoopTransmit;
  if (name == "best-relay") return Strategy::BestRelay;
  if (name == "best-jammer") return Strategy::BestJammer;
  throw std::invalid_argument("unknown strategy '" + std::string(name) +
                              "' (expected direct, coop-tx, best-relay, or "
                              "best-jammer)");
}

std::string_view strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::Direct: return "direct";
    case Strategy::CoopTransmit: return "coop-tx";
    case Strategy::BestRelay: return "best-relay";
    case Strategy::BestJammer: return "best-jammer";
  }
  throw std::logic_error("strategy_name: unknown strategy");
}

FriendlyRoles assign_roles(std::span<const Point> friendly) {
  if (friendly.empty()) {
    throw std::invalid_argument("assign_roles: no friendly nodes");
  }
  return FriendlyRoles{friendly.front(),
                       {friendly.begin() + 1, friendly.end()}};
}

bool eval_direct(const FriendlyRoles& roles, std::span<const Point> eaves,
                 Point receiver, const StrategyConfig& /*cfg*/) {
  const Point tx[] = {roles.designated_tx};
  return covered(tx, eaves, receiver);
}

bool eval_coop_transmit(std::span<const Point> friendly,
                        std::span<const Point> eaves, Point receiver) {
  return covered(friendly, eaves, receiver);
}

bool eval_best_jammer(const FriendlyRoles& roles,
                      std::span<const Point> eaves, Point receiver,
                      const StrategyConfig& cfg) {
  if (eval_direct(roles, eaves, receiver, cfg)) return true;
  const auto& ch = cfg.channel;
  for (const auto& j : roles.helpers) {
    const double at_receiver = sinr_at(receiver, roles.designated_tx, j, ch);
    bool beats_every_eve = true;
    for (const auto& e : eaves) {
      if (sinr_at(e, roles.designated_tx, j, ch) >= at_receiver) {
        beats_every_eve = false;
        break;
      }
    }
    if (beats_every_eve) return true;
  }
  return false;
}

bool eval_best_relay(const FriendlyRoles& roles,
                     std::span<const Point> eaves, Point receiver,
                     const StrategyConfig& cfg) {
  if (eval_direct(roles, eaves, receiver, cfg)) return true;
  const auto& ch = cfg.channel;
  for (const auto& j : roles.helpers) {
    const double through = std::min(capacity_or_inf(ch, roles.designated_tx, j),
                                    capacity_or_inf(ch, j, receiver));
    bool outpaces_every_eve = true;
    for (const auto& e : eaves) {
      // Eavesdroppers hear both hops; take the stronger one.
      const double leak = std::max(capacity_or_inf(ch, roles.designated_tx, e),
                                   capacity_or_inf(ch, j, e));
      if (leak >= through) {
        outpaces_every_eve = false;
        break;
      }
    }
    if (outpaces_every_eve) return true;
  }
  return false;
}

bool eval_strategy(const StrategyConfig& cfg, std::span<const Point> friendly,
                   std::span<const Point> eaves, Point receiver) {
  if (friendly.empty()) return false;
  if (cfg.strategy == Strategy::CoopTransmit) {
    return eval_coop_transmit(friendly, eaves, receiver);
  }
  const auto roles = assign_roles(friendly);
  switch (cfg.strategy) {
    case Strategy::Direct:
      return eval_direct(roles, eaves, receiver, cfg);
    case Strategy::BestJammer:
      return eval_best_jammer(roles, eaves, receiver, cfg);
    case Strategy::BestRelay:
      return eval_best_relay(roles, eaves, receiver, cfg);
    case Strategy::CoopTransmit:
      break;
  }
  throw std::logic_error("eval_strategy: unknown strategy");
}

}  // namespace coopsec
