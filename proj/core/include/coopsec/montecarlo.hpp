#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "coopsec/geometry.hpp"
#include "coopsec/placement.hpp"
#include "coopsec/strategies.hpp"

namespace coopsec {

/// One experiment: who transmits, who listens in, how friendly nodes
/// cooperate, and where everyone lives.
struct Scenario {
  ProcessSpec tx_process;
  ProcessSpec eve_process;
  StrategyConfig strategy;
  Region region;

  void validate() const;
};

struct Estimate {
  double p_hat = 0.0;
  std::uint64_t trials = 0;
  double ci_half_width = 0.0;  // z * sqrt(p_hat (1 - p_hat) / trials)
  std::uint64_t master_seed = 0;
  std::uint64_t successes = 0;
  double z = 3.0;
};

/// One network realization: friendly nodes from tx_process, eavesdroppers
/// from eve_process, receiver uniform, each from its own trial-indexed
/// stream, so the outcome depends only on (scenario, trial_id, master_seed).
/// Zero sampled transmitters can never be secure.
bool run_trial(const Scenario& scenario, std::uint64_t trial_id,
               std::uint64_t master_seed);

/// Monte Carlo estimate of P{Cs > 0} over the given trial count. threads = 0
/// picks the hardware count; the success total is identical for every thread
/// count because trials are partitioned statically by trial_id and reduced
/// by integer addition. Throws std::invalid_argument when trials = 0.
Estimate estimate(const Scenario& scenario, std::uint64_t trials,
                  std::uint64_t master_seed, unsigned threads = 0,
                  double z = 3.0);

enum class SweepAxis { TxParam, EveParam, Beta, Power, Noise, JamPower };

/// Parses `tx-param`, `eve-param`, `beta`, `power`, `noise`, `jam-power`.
/// Throws std::invalid_argument naming the valid axes.
SweepAxis parse_axis(std::string_view name);

std::string_view axis_name(SweepAxis axis);

/// Returns base with the named parameter replaced by value; validates the
/// resulting scenario.
Scenario apply_axis(Scenario base, SweepAxis axis, double value);

struct SweepRow {
  Scenario scenario;
  Estimate estimate;
};

/// One estimate per value, each under the full scenario it ran with.
std::vector<SweepRow> sweep(const Scenario& base, SweepAxis axis,
                            std::span<const double> values,
                            std::uint64_t trials, std::uint64_t master_seed,
                            unsigned threads = 0, double z = 3.0);

std::vector<SweepRow> sweep(const Scenario& base, std::string_view axis,
                            std::span<const double> values,
                            std::uint64_t trials, std::uint64_t master_seed,
                            unsigned threads = 0, double z = 3.0);

}  // namespace coopsec
