#include "coopsec/montecarlo.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace coopsec {

namespace {

// Each trial owns four consecutive stream ids so the three samples stay
// independent and a fourth is spare; trial outcomes are then a pure function
// of (master_seed, trial_id), whatever the thread layout.
enum StreamRole : std::uint64_t { kTxRole = 0, kEveRole = 1, kReceiverRole = 2 };
constexpr std::uint64_t kRolesPerTrial = 4;

std::uint64_t count_successes(const Scenario& scenario, std::uint64_t first,
                              std::uint64_t count, std::uint64_t master_seed) {
  std::uint64_t successes = 0;
  for (std::uint64_t t = first; t < first + count; ++t) {
    successes += run_trial(scenario, t, master_seed) ? 1 : 0;
  }
  return successes;
}

}  // namespace

void Scenario::validate() const {
  tx_process.validate();
  eve_process.validate();
  strategy.channel.validate();
}

bool run_trial(const Scenario& scenario, std::uint64_t trial_id,
               std::uint64_t master_seed) {
  const auto friendly = sample_process(
      scenario.tx_process, scenario.region,
      SeedStream{master_seed, trial_id * kRolesPerTrial + kTxRole});
  if (friendly.empty()) return false;
  const auto eaves = sample_process(
      scenario.eve_process, scenario.region,
      SeedStream{master_seed, trial_id * kRolesPerTrial + kEveRole});
  // Same draw order as sample_iud's first point.
  Pcg32 rx_rng(SeedStream{master_seed, trial_id * kRolesPerTrial + kReceiverRole});
  const double x = rx_rng.next_double();
  const double y = rx_rng.next_double();
  return eval_strategy(scenario.strategy, friendly, eaves, Point{x, y});
}

Estimate estimate(const Scenario& scenario, std::uint64_t trials,
                  std::uint64_t master_seed, unsigned threads, double z) {
  scenario.validate();
  if (trials == 0) {
    throw std::invalid_argument("estimate: need at least one trial");
  }
  if (!(z > 0.0)) {
    throw std::invalid_argument("estimate: z must be positive");
  }
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  if (threads > trials) threads = static_cast<unsigned>(trials);

  std::uint64_t successes = 0;
  if (threads == 1) {
    successes = count_successes(scenario, 0, trials, master_seed);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t base = trials / threads;
    const std::uint64_t extra = trials % threads;
    std::uint64_t first = 0;
    for (unsigned k = 0; k < threads; ++k) {
      const std::uint64_t count = base + (k < extra ? 1 : 0);
      pool.emplace_back([&, k, first, count] {
        try {
          partial[k] = count_successes(scenario, first, count, master_seed);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
      first += count;
    }
    for (auto& worker : pool) worker.join();
    for (const auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
    for (const auto part : partial) successes += part;
  }

  Estimate result;
  result.trials = trials;
  result.successes = successes;
  result.master_seed = master_seed;
  result.z = z;
  result.p_hat =
      static_cast<double>(successes) / static_cast<double>(trials);
  result.ci_half_width =
      z * std::sqrt(result.p_hat * (1.0 - result.p_hat) /
                    static_cast<double>(trials));
  return result;
}

SweepAxis parse_axis(std::string_view name) {
  if (name == "tx-param") return SweepAxis::TxParam;
  if (name == "eve-param") return SweepAxis::EveParam;
  if (name == "beta") return SweepAxis::Beta;
  if (name == "power") return SweepAxis::Power;
  if (name == "noise") return SweepAxis::Noise;
  if (name == "jam-power") return SweepAxis::JamPower;
  throw std::invalid_argument(
      "unknown sweep axis '" + std::string(name) +
      "' (valid: tx-param, eve-param, beta, power, noise, jam-power)");
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::TxParam: return "tx-param";
    case SweepAxis::EveParam: return "eve-param";
    case SweepAxis::Beta: return "beta";
    case SweepAxis::Power: return "power";
    case SweepAxis::Noise: return "noise";
    case SweepAxis::JamPower: return "jam-power";
  }
  throw std::logic_error("axis_name: unknown axis");
}

Scenario apply_axis(Scenario base, SweepAxis axis, double value) {
  switch (axis) {
    case SweepAxis::TxParam: base.tx_process.param = value; break;
    case SweepAxis::EveParam: base.eve_process.param = value; break;
    case SweepAxis::Beta: base.strategy.channel.beta = value; break;
    case SweepAxis::Power: base.strategy.channel.power = value; break;
    case SweepAxis::Noise: base.strategy.channel.noise_var = value; break;
    case SweepAxis::JamPower:
      base.strategy.channel.jammer_power = value;
      break;
  }
  base.validate();
  return base;
}

std::vector<SweepRow> sweep(const Scenario& base, SweepAxis axis,
                            std::span<const double> values,
                            std::uint64_t trials, std::uint64_t master_seed,
                            unsigned threads, double z) {
  std::vector<SweepRow> rows;
  rows.reserve(values.size());
  for (const double value : values) {
    SweepRow row;
    row.scenario = apply_axis(base, axis, value);
    row.estimate = estimate(row.scenario, trials, master_seed, threads, z);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<SweepRow> sweep(const Scenario& base, std::string_view axis,
                            std::span<const double> values,
                            std::uint64_t trials, std::uint64_t master_seed,
                            unsigned threads, double z) {
  return sweep(base, parse_axis(axis), values, trials, master_seed, threads,
               z);
}

}  // namespace coopsec
