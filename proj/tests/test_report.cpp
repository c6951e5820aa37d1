#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "coopsec/report.hpp"

using namespace coopsec;

namespace {

RunRecord sample_record() {
  RunRecord record;
  record.tx_process = "iud";
  record.tx_param = 10;
  record.eve_process = "poisson";
  record.eve_param = 2.5;
  record.strategy = "coop-tx";
  record.beta = 4;
  record.trials = 100000;
  record.seed = 42;
  // reals chosen to be fixed points of the 12-digit rendering, so
  // round-trips can compare for exact equality
  record.p_hat = 0.76523;
  record.ci_half_width = 0.00402123456789;
  record.bound = 0.632120558829;
  record.bound_kind = "upper-bound";
  return record;
}

Scenario make_scenario(std::string_view tx, std::string_view eve,
                       Strategy strategy = Strategy::CoopTransmit) {
  Scenario scenario;
  scenario.tx_process = ProcessSpec::parse(tx);
  scenario.eve_process = ProcessSpec::parse(eve);
  scenario.strategy.strategy = strategy;
  return scenario;
}

}  // namespace

TEST_CASE("format_real renders twelve significant digits") {
  CHECK(format_real(0.75) == "0.75");
  CHECK(format_real(5.0) == "5");
  CHECK(format_real(0.632120558828558) == "0.632120558829");
  CHECK(format_real(0.1) == "0.1");
  CHECK(format_real(123456789012.0) == "123456789012");
}

TEST_CASE("csv header lists the record fields in order") {
  CHECK(csv_header() ==
        "tx_process,tx_param,eve_process,eve_param,strategy,beta,trials,"
        "seed,p_hat,ci_half_width,bound,bound_kind");
}

TEST_CASE("records round-trip through CSV") {
  const auto record = sample_record();
  CHECK(parse_csv_row(csv_header(), to_csv_row(record)) == record);

  auto no_bound = record;
  no_bound.bound.reset();
  no_bound.bound_kind.clear();
  const auto row = to_csv_row(no_bound);
  CHECK(row.substr(row.size() - 2) == ",,");
  CHECK(parse_csv_row(csv_header(), row) == no_bound);
}

TEST_CASE("parsing tolerates extra columns and reordered headers") {
  const auto record = sample_record();
  const auto with_extra = parse_csv_row(csv_header() + ",bound_asymptotic",
                                        to_csv_row(record) + ",0.9999");
  CHECK(with_extra == record);

  const std::string shuffled_header =
      "seed,trials,strategy,tx_process,tx_param,eve_process,eve_param,beta,"
      "p_hat,ci_half_width,bound,bound_kind";
  const std::string shuffled_row =
      "42,100000,coop-tx,iud,10,poisson,2.5,4,0.76523,0.00402123456789,"
      "0.632120558829,upper-bound";
  CHECK(parse_csv_row(shuffled_header, shuffled_row) == record);
}

TEST_CASE("parsing rejects malformed rows") {
  const auto record = sample_record();
  const auto row = to_csv_row(record);

  CHECK_THROWS_AS(parse_csv_row(csv_header(), row + ",extra"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      parse_csv_row("tx_process,tx_param", "iud,10"),
      std::invalid_argument);

  std::string mangled = row;
  mangled.replace(mangled.find("0.76523"), 7, "not-a-p");
  CHECK_THROWS_AS(parse_csv_row(csv_header(), mangled),
                  std::invalid_argument);

  // bound and bound_kind must be present or absent together
  const std::string orphan_bound =
      "iud,10,iud,5,coop-tx,4,100,1,0.5,0.01,0.75,";
  CHECK_THROWS_AS(parse_csv_row(csv_header(), orphan_bound),
                  std::invalid_argument);
  const std::string orphan_kind =
      "iud,10,iud,5,coop-tx,4,100,1,0.5,0.01,,exact";
  CHECK_THROWS_AS(parse_csv_row(csv_header(), orphan_kind),
                  std::invalid_argument);
}

TEST_CASE("fields containing separators are quoted") {
  auto record = sample_record();
  record.strategy = "coop,\"tx\"";
  const auto row = to_csv_row(record);
  CHECK(row.find("\"coop,\"\"tx\"\"\"") != std::string::npos);
  CHECK(parse_csv_row(csv_header(), row) == record);
}

TEST_CASE("closed forms attach to the scenarios that have them") {
  const auto exact = closed_form_bound(make_scenario("iud:1", "iud:1"));
  REQUIRE(exact.has_value());
  CHECK(exact->value == 0.5);
  CHECK(exact->kind == BoundKind::Exact);

  const auto upper = closed_form_bound(make_scenario("iud:5", "iud:3"));
  REQUIRE(upper.has_value());
  CHECK(upper->value == doctest::Approx(1.0 - std::pow(0.75, 5)).epsilon(1e-12));
  CHECK(upper->kind == BoundKind::UpperBound);

  const auto poisson_tx = closed_form_bound(make_scenario("poisson:2", "iud:1"));
  REQUIRE(poisson_tx.has_value());
  CHECK(poisson_tx->value ==
        doctest::Approx(0.632120558828558).epsilon(1e-14));
  CHECK(poisson_tx->kind == BoundKind::UpperBound);

  const auto poisson_eve = closed_form_bound(make_scenario("iud:1", "poisson:2"));
  REQUIRE(poisson_eve.has_value());
  CHECK(poisson_eve->value ==
        doctest::Approx(0.432332358381694).epsilon(1e-14));
  CHECK(poisson_eve->kind == BoundKind::Exact);
}

TEST_CASE("scenarios without closed forms get none") {
  CHECK_FALSE(closed_form_bound(make_scenario("iud:2", "poisson:1")).has_value());
  CHECK_FALSE(closed_form_bound(make_scenario("hex:9", "iud:5")).has_value());
  CHECK_FALSE(closed_form_bound(make_scenario("square:4", "iud:5")).has_value());
  CHECK_FALSE(closed_form_bound(make_scenario("poisson:2", "poisson:2")).has_value());
  CHECK_FALSE(closed_form_bound(make_scenario("iud:0", "iud:5")).has_value());
  CHECK_FALSE(
      closed_form_bound(make_scenario("iud:1", "iud:1", Strategy::Direct))
          .has_value());
  CHECK_FALSE(
      closed_form_bound(make_scenario("iud:5", "iud:3", Strategy::BestRelay))
          .has_value());
}

TEST_CASE("make_run_record copies scenario and estimate fields") {
  auto scenario = make_scenario("iud:10", "iud:5");
  scenario.strategy.channel.beta = 3.0;
  Estimate est;
  est.p_hat = 0.75;
  est.trials = 12345;
  est.ci_half_width = 0.0123;
  est.master_seed = 99;
  est.successes = 9259;

  const auto record = make_run_record(scenario, est);
  CHECK(record.tx_process == "iud");
  CHECK(record.tx_param == 10.0);
  CHECK(record.eve_process == "iud");
  CHECK(record.eve_param == 5.0);
  CHECK(record.strategy == "coop-tx");
  CHECK(record.beta == 3.0);
  CHECK(record.trials == 12345);
  CHECK(record.seed == 99);
  CHECK(record.p_hat == 0.75);
  CHECK(record.ci_half_width == 0.0123);
  REQUIRE(record.bound.has_value());
  CHECK(record.bound_kind == "upper-bound");

  const auto bare = make_run_record(make_scenario("hex:9", "iud:5"), est);
  CHECK_FALSE(bare.bound.has_value());
  CHECK(bare.bound_kind.empty());
}
