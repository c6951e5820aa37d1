#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coopsec/bounds.hpp"
#include "coopsec/montecarlo.hpp"

namespace coopsec {

/// One CSV row: the full scenario alongside the estimate and, when a closed
/// form exists, the matching bound.
struct RunRecord {
  std::string tx_process;
  double tx_param = 0.0;
  std::string eve_process;
  double eve_param = 0.0;
  std::string strategy;
  double beta = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  double p_hat = 0.0;
  double ci_half_width = 0.0;
  std::optional<double> bound;
  std::string bound_kind;  // empty iff bound is absent

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Shortest-faithful rendering with 12 significant digits.
std::string format_real(double value);

/// Column names in RunRecord field order, comma separated.
std::string csv_header();

std::string to_csv_row(const RunRecord& record);

/// Reads one data line using the header to locate columns, so extra columns
/// are tolerated and order is free. Throws std::invalid_argument on missing
/// columns or malformed numerics.
RunRecord parse_csv_row(std::string_view header_line,
                        std::string_view data_line);

/// The scenario's closed-form exact value or upper bound, when one is known:
/// cooperative transmitting with IUD/IUD, Poisson/IUD, or single-transmitter
/// IUD/Poisson processes. Everything else (lattices, Poisson eavesdroppers
/// with several transmitters, other strategies) has none.
std::optional<BoundResult> closed_form_bound(const Scenario& scenario);

RunRecord make_run_record(const Scenario& scenario, const Estimate& estimate);

}  // namespace coopsec
