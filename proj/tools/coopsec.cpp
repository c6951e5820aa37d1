#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "coopsec/bounds.hpp"
#include "coopsec/keyexchange.hpp"
#include "coopsec/montecarlo.hpp"
#include "coopsec/placement.hpp"
#include "coopsec/report.hpp"
#include "coopsec/rng.hpp"
#include "coopsec/strategies.hpp"

using namespace coopsec;

namespace {

struct CommonFlags {
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  double beta = 4.0;
  double power = 1.0;
  double noise = 1.0;
  std::optional<double> jam_power;
  std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& c) {
  cmd->add_option("--trials", c.trials, "Monte Carlo trials per estimate")
      ->capture_default_str();
  cmd->add_option("--seed", c.seed, "master seed")->capture_default_str();
  cmd->add_option("--threads", c.threads,
                  "worker threads, 0 picks the hardware count")
      ->capture_default_str();
  cmd->add_option("--beta", c.beta, "path-loss exponent")
      ->capture_default_str();
  cmd->add_option("--power", c.power, "transmit power P_t")
      ->capture_default_str();
  cmd->add_option("--noise", c.noise, "noise variance sigma^2")
      ->capture_default_str();
  cmd->add_option("--jam-power", c.jam_power,
                  "jammer power P_j (defaults to P_t)");
  cmd->add_option("--out", c.out, "write output to this file, not stdout");
}

ChannelParams channel_from(const CommonFlags& c) {
  ChannelParams ch;
  ch.power = c.power;
  ch.noise_var = c.noise;
  ch.beta = c.beta;
  ch.jammer_power = c.jam_power.value_or(c.power);
  return ch;
}

Scenario make_scenario(const std::string& tx, const std::string& eve,
                       const std::string& strategy, const CommonFlags& c) {
  Scenario s;
  s.tx_process = ProcessSpec::parse(tx);
  s.eve_process = ProcessSpec::parse(eve);
  s.strategy.strategy = parse_strategy(strategy);
  s.strategy.channel = channel_from(c);
  s.validate();
  return s;
}

void with_output(const std::string& path,
                 const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  emit(file);
  file.flush();
  if (!file) throw std::runtime_error("failed writing output file: " + path);
}

double parse_value_token(const std::string& token) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument("values: bad number '" + token + "'");
  }
  return value;
}

// Comma-separated reals; `a..b` expands to the inclusive integer range.
std::vector<double> parse_values(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto dots = token.find("..");
    if (dots != std::string::npos) {
      const auto lo_text = token.substr(0, dots);
      const auto hi_text = token.substr(dots + 2);
      long long lo = 0, hi = 0;
      const auto lo_res =
          std::from_chars(lo_text.data(), lo_text.data() + lo_text.size(), lo);
      const auto hi_res =
          std::from_chars(hi_text.data(), hi_text.data() + hi_text.size(), hi);
      if (lo_res.ec != std::errc{} ||
          lo_res.ptr != lo_text.data() + lo_text.size() ||
          hi_res.ec != std::errc{} ||
          hi_res.ptr != hi_text.data() + hi_text.size() || hi < lo) {
        throw std::invalid_argument("values: bad range '" + token +
                                    "' (expected a..b with integer a <= b)");
      }
      for (long long v = lo; v <= hi; ++v) {
        values.push_back(static_cast<double>(v));
      }
    } else {
      values.push_back(parse_value_token(token));
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return values;
}

void emit_record(std::ostream& os, const Scenario& s, const Estimate& est) {
  os << to_csv_row(make_run_record(s, est)) << '\n';
}

void run_sim(const std::string& tx, const std::string& eve,
             const std::string& strategy, const CommonFlags& c) {
  const Scenario s = make_scenario(tx, eve, strategy, c);
  const Estimate est = estimate(s, c.trials, c.seed, c.threads);
  with_output(c.out, [&](std::ostream& os) {
    os << csv_header() << '\n';
    emit_record(os, s, est);
  });
}

void run_sweep(const std::string& tx, const std::string& eve,
               const std::string& strategy, const std::string& axis,
               const std::string& values_text, const CommonFlags& c) {
  const Scenario base = make_scenario(tx, eve, strategy, c);
  const auto values = parse_values(values_text);
  const auto rows = sweep(base, axis, values, c.trials, c.seed, c.threads);
  with_output(c.out, [&](std::ostream& os) {
    os << csv_header() << '\n';
    for (const auto& row : rows) emit_record(os, row.scenario, row.estimate);
  });
}

void run_bound(const std::string& selector,
               const std::optional<std::uint64_t>& nt,
               const std::optional<std::uint64_t>& ne,
               const std::optional<double>& k,
               const std::optional<double>& lambda_t,
               const std::optional<double>& lambda_e,
               const CommonFlags& c) {
  const auto require = [&](const auto& opt, const char* flag) -> auto {
    if (!opt) {
      throw std::invalid_argument("bound " + selector + " requires " + flag);
    }
    return *opt;
  };
  BoundResult result;
  if (selector == "eq3") {
    result = exact_single_tx_iud_eve(require(ne, "--ne"));
  } else if (selector == "eq4") {
    result = ub_iud_iud(require(nt, "--nt"), require(ne, "--ne"));
  } else if (selector == "eq5") {
    result = ub_asymptotic(require(k, "--k"));
  } else if (selector == "eq6") {
    result = ub_poisson_tx_iud_eve(require(lambda_t, "--lambda-t"),
                                   require(ne, "--ne"));
  } else if (selector == "sec3c") {
    result = exact_single_tx_poisson_eve(require(lambda_e, "--lambda-e"));
  } else {
    throw std::invalid_argument(
        "unknown bound selector '" + selector +
        "' (valid: eq3, eq4, eq5, eq6, sec3c)");
  }
  with_output(c.out,
              [&](std::ostream& os) { os << format_real(result.value) << '\n'; });
}

// One curve per eavesdropper parameter 1..10, transmitter parameter 1..10
// along each curve, cooperative transmitting.
void emit_grid(std::ostream& os, const CommonFlags& c, ProcessFamily tx_family,
               ProcessFamily eve_family) {
  os << csv_header() << '\n';
  Scenario s;
  s.tx_process.family = tx_family;
  s.eve_process.family = eve_family;
  s.strategy.strategy = Strategy::CoopTransmit;
  s.strategy.channel = channel_from(c);
  for (int ep = 1; ep <= 10; ++ep) {
    s.eve_process.param = ep;
    for (int tp = 1; tp <= 10; ++tp) {
      s.tx_process.param = tp;
      emit_record(os, s, estimate(s, c.trials, c.seed, c.threads));
    }
  }
}

// Ten transmitters, eavesdropper count 1..10, with the finite bound column
// plus the large-network asymptote at ratio k = 10/n_E as an extra column.
void emit_fig4(std::ostream& os, const CommonFlags& c) {
  os << csv_header() << ",bound_asymptotic\n";
  Scenario s;
  s.tx_process = ProcessSpec{ProcessFamily::Iud, 10.0};
  s.eve_process.family = ProcessFamily::Iud;
  s.strategy.strategy = Strategy::CoopTransmit;
  s.strategy.channel = channel_from(c);
  for (int ep = 1; ep <= 10; ++ep) {
    s.eve_process.param = ep;
    const Estimate est = estimate(s, c.trials, c.seed, c.threads);
    const double k = 10.0 / static_cast<double>(ep);
    os << to_csv_row(make_run_record(s, est)) << ','
       << format_real(ub_asymptotic(k).value) << '\n';
  }
}

// Strategy and process comparison at eavesdropper parameter 5: cooperative
// transmitting across the process combinations, then the three single-helper
// baselines, friendly-node count 1..10 on every curve.
void emit_fig7(std::ostream& os, const CommonFlags& c) {
  struct CurveSpec {
    ProcessFamily tx;
    ProcessFamily eve;
    Strategy strategy;
  };
  static constexpr CurveSpec kCurves[] = {
      {ProcessFamily::HexLattice, ProcessFamily::Iud, Strategy::CoopTransmit},
      {ProcessFamily::SquareLattice, ProcessFamily::Iud,
       Strategy::CoopTransmit},
      {ProcessFamily::Iud, ProcessFamily::Iud, Strategy::CoopTransmit},
      {ProcessFamily::Iud, ProcessFamily::Poisson, Strategy::CoopTransmit},
      {ProcessFamily::Poisson, ProcessFamily::Iud, Strategy::CoopTransmit},
      {ProcessFamily::Poisson, ProcessFamily::Poisson,
       Strategy::CoopTransmit},
      {ProcessFamily::Iud, ProcessFamily::Iud, Strategy::BestRelay},
      {ProcessFamily::Iud, ProcessFamily::Iud, Strategy::BestJammer},
      {ProcessFamily::Iud, ProcessFamily::Iud, Strategy::Direct},
  };
  os << csv_header() << '\n';
  for (const auto& curve : kCurves) {
    Scenario s;
    s.tx_process.family = curve.tx;
    s.eve_process = ProcessSpec{curve.eve, 5.0};
    s.strategy.strategy = curve.strategy;
    s.strategy.channel = channel_from(c);
    for (int n = 1; n <= 10; ++n) {
      s.tx_process.param = n;
      emit_record(os, s, estimate(s, c.trials, c.seed, c.threads));
    }
  }
}

void run_figure(int id, const CommonFlags& c) {
  if (id < 2 || id > 7) {
    throw std::invalid_argument("figure: unknown id " + std::to_string(id) +
                                " (valid: 2, 3, 4, 5, 6, 7)");
  }
  with_output(c.out, [&](std::ostream& os) {
    switch (id) {
      case 2:
      case 3:
        // Same grid: 3 is 2 with attention on the bound column.
        emit_grid(os, c, ProcessFamily::Iud, ProcessFamily::Iud);
        break;
      case 4:
        emit_fig4(os, c);
        break;
      case 5:
        emit_grid(os, c, ProcessFamily::Poisson, ProcessFamily::Iud);
        break;
      case 6:
        emit_grid(os, c, ProcessFamily::Iud, ProcessFamily::Poisson);
        break;
      case 7:
        emit_fig7(os, c);
        break;
    }
  });
}

void run_keyx_demo(const std::string& tx, const std::string& eve,
                   std::size_t n_bytes, std::uint64_t trial,
                   const CommonFlags& c) {
  const Scenario s = make_scenario(tx, eve, "coop-tx", c);
  Deployment d;
  d.transmitters =
      sample_process(s.tx_process, s.region, SeedStream{c.seed, trial * 4});
  d.eavesdroppers = sample_process(s.eve_process, s.region,
                                   SeedStream{c.seed, trial * 4 + 1});
  Pcg32 rx_rng(SeedStream{c.seed, trial * 4 + 2});
  const double rx = rx_rng.next_double();
  const double ry = rx_rng.next_double();
  d.receiver = Point{rx, ry};
  if (d.transmitters.empty()) {
    throw std::runtime_error(
        "keyx-demo: sampled zero transmitters; try another seed or process");
  }

  Pcg32 secret_rng(SeedStream{c.seed, trial * 4 + 3});
  std::vector<std::uint8_t> pre_secret(n_bytes);
  for (auto& b : pre_secret) {
    b = static_cast<std::uint8_t>(secret_rng.next_u32() & 0xff);
  }
  const auto outcome = simulate_exchange(d, pre_secret);
  const auto blocks = split_presecret(pre_secret, d.transmitters.size());

  with_output(c.out, [&](std::ostream& os) {
    const auto point = [](Point p) {
      return "(" + format_real(p.x) + ", " + format_real(p.y) + ")";
    };
    os << "deployment (seed " << c.seed << ", trial " << trial << ")\n";
    for (std::size_t i = 0; i < d.transmitters.size(); ++i) {
      os << "  transmitter " << i + 1 << ": " << point(d.transmitters[i])
         << '\n';
    }
    if (d.eavesdroppers.empty()) {
      os << "  eavesdroppers: none\n";
    }
    for (std::size_t i = 0; i < d.eavesdroppers.size(); ++i) {
      os << "  eavesdropper " << i + 1 << ": " << point(d.eavesdroppers[i])
         << '\n';
    }
    os << "  receiver: " << point(d.receiver) << '\n';
    os << "pre-secret: " << n_bytes << " octets, " << to_hex(pre_secret)
       << '\n';
    std::size_t private_blocks = 0;
    for (std::size_t i = 0; i < outcome.intercepted.size(); ++i) {
      os << "block " << i + 1 << ": " << blocks.blocks[i].size()
         << " octets, "
         << (outcome.intercepted[i] ? "intercepted" : "private") << '\n';
      if (!outcome.intercepted[i]) ++private_blocks;
    }
    os << "receiver key: " << to_hex(outcome.receiver_key) << '\n';
    if (outcome.adversary_key) {
      os << "adversary key: " << to_hex(*outcome.adversary_key) << '\n';
    } else {
      os << "adversary key: none (" << private_blocks
         << " block(s) not intercepted)\n";
    }
    os << "verdict: " << (outcome.secure ? "secure" : "compromised") << '\n';
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy-coverage Monte Carlo toolkit"};
  app.require_subcommand(1);

  CommonFlags sim_flags;
  std::string sim_tx, sim_eve, sim_strategy = "coop-tx";
  auto* sim_cmd =
      app.add_subcommand("sim", "Estimate P{Cs>0} for one scenario");
  sim_cmd->add_option("--tx", sim_tx, "transmitter process, family:param")
      ->required();
  sim_cmd->add_option("--eve", sim_eve, "eavesdropper process, family:param")
      ->required();
  sim_cmd->add_option("--strategy", sim_strategy,
                      "direct, coop-tx, best-relay, or best-jammer")
      ->capture_default_str();
  add_common(sim_cmd, sim_flags);
  sim_cmd->callback([&] { run_sim(sim_tx, sim_eve, sim_strategy, sim_flags); });

  CommonFlags sweep_flags;
  std::string sweep_tx, sweep_eve, sweep_strategy = "coop-tx";
  std::string sweep_axis, sweep_values;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Estimate along one parameter axis");
  sweep_cmd->add_option("--tx", sweep_tx, "transmitter process, family:param")
      ->required();
  sweep_cmd
      ->add_option("--eve", sweep_eve, "eavesdropper process, family:param")
      ->required();
  sweep_cmd->add_option("--strategy", sweep_strategy,
                        "direct, coop-tx, best-relay, or best-jammer")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--axis", sweep_axis,
                   "tx-param, eve-param, beta, power, noise, or jam-power")
      ->required();
  sweep_cmd
      ->add_option("--values", sweep_values,
                   "comma-separated values; a..b expands to integers a..b")
      ->required();
  add_common(sweep_cmd, sweep_flags);
  sweep_cmd->callback([&] {
    run_sweep(sweep_tx, sweep_eve, sweep_strategy, sweep_axis, sweep_values,
              sweep_flags);
  });

  CommonFlags bound_flags;
  std::string bound_selector;
  std::optional<std::uint64_t> bound_nt, bound_ne;
  std::optional<double> bound_k, bound_lambda_t, bound_lambda_e;
  auto* bound_cmd =
      app.add_subcommand("bound", "Print a closed-form value or bound");
  bound_cmd
      ->add_option("selector", bound_selector,
                   "eq3, eq4, eq5, eq6, or sec3c")
      ->required();
  bound_cmd->add_option("--nt", bound_nt, "transmitter count");
  bound_cmd->add_option("--ne", bound_ne, "eavesdropper count");
  bound_cmd->add_option("--k", bound_k, "transmitter/eavesdropper ratio");
  bound_cmd->add_option("--lambda-t", bound_lambda_t, "transmitter rate");
  bound_cmd->add_option("--lambda-e", bound_lambda_e, "eavesdropper rate");
  add_common(bound_cmd, bound_flags);
  bound_cmd->callback([&] {
    run_bound(bound_selector, bound_nt, bound_ne, bound_k, bound_lambda_t,
              bound_lambda_e, bound_flags);
  });

  CommonFlags figure_flags;
  int figure_id = 0;
  auto* figure_cmd =
      app.add_subcommand("figure", "Emit the full grid behind one figure");
  figure_cmd->add_option("--id", figure_id, "figure number, 2 through 7")
      ->required();
  add_common(figure_cmd, figure_flags);
  figure_cmd->callback([&] { run_figure(figure_id, figure_flags); });

  CommonFlags keyx_flags;
  std::string keyx_tx = "iud:5", keyx_eve = "iud:5";
  std::size_t keyx_bytes = 64;
  std::uint64_t keyx_trial = 0;
  auto* keyx_cmd = app.add_subcommand(
      "keyx-demo", "Run one cooperative key exchange and print a transcript");
  keyx_cmd->add_option("--tx", keyx_tx, "transmitter process, family:param")
      ->capture_default_str();
  keyx_cmd->add_option("--eve", keyx_eve, "eavesdropper process, family:param")
      ->capture_default_str();
  keyx_cmd->add_option("--bytes", keyx_bytes, "pre-secret length in octets")
      ->capture_default_str();
  keyx_cmd->add_option("--trial", keyx_trial, "trial id selecting the sample")
      ->capture_default_str();
  add_common(keyx_cmd, keyx_flags);
  keyx_cmd->callback(
      [&] { run_keyx_demo(keyx_tx, keyx_eve, keyx_bytes, keyx_trial, keyx_flags); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // help requested
    std::cerr << "error: " << e.what() << '\n'
              << "run with --help for usage\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
