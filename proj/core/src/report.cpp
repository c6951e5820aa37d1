#include "coopsec/report.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace coopsec {

namespace {

constexpr std::string_view kColumns[] = {
    "tx_process", "tx_param", "eve_process", "eve_param",
    "strategy",   "beta",     "trials",      "seed",
    "p_hat",      "ci_half_width", "bound",  "bound_kind",
};

std::string quote_if_needed(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string quoted = "\"";
  for (const char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool in_quotes = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (in_quotes) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        in_quotes = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      in_quotes = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

double parse_double_field(const std::string& text, std::string_view column) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("csv: bad real in column '" +
                                std::string(column) + "': '" + text + "'");
  }
  return value;
}

std::uint64_t parse_count_field(const std::string& text,
                                std::string_view column) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("csv: bad count in column '" +
                                std::string(column) + "': '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_header() {
  std::string header;
  for (const auto col : kColumns) {
    if (!header.empty()) header += ',';
    header += col;
  }
  return header;
}

std::string to_csv_row(const RunRecord& r) {
  std::string row;
  const auto push = [&row](const std::string& field) {
    if (!row.empty()) row += ',';
    row += quote_if_needed(field);
  };
  push(r.tx_process);
  push(format_real(r.tx_param));
  push(r.eve_process);
  push(format_real(r.eve_param));
  push(r.strategy);
  push(format_real(r.beta));
  push(std::to_string(r.trials));
  push(std::to_string(r.seed));
  push(format_real(r.p_hat));
  push(format_real(r.ci_half_width));
  push(r.bound ? format_real(*r.bound) : std::string());
  push(r.bound_kind);
  return row;
}

RunRecord parse_csv_row(std::string_view header_line,
                        std::string_view data_line) {
  const auto names = split_csv_line(header_line);
  const auto values = split_csv_line(data_line);
  if (values.size() != names.size()) {
    throw std::invalid_argument("csv: row has " +
                                std::to_string(values.size()) +
                                " fields, header has " +
                                std::to_string(names.size()));
  }
  std::unordered_map<std::string_view, const std::string*> by_name;
  for (std::size_t i = 0; i < names.size(); ++i) {
    by_name.emplace(names[i], &values[i]);
  }
  const auto field = [&](std::string_view column) -> const std::string& {
    const auto it = by_name.find(column);
    if (it == by_name.end()) {
      throw std::invalid_argument("csv: missing column '" +
                                  std::string(column) + "'");
    }
    return *it->second;
  };

  RunRecord r;
  r.tx_process = field("tx_process");
  r.tx_param = parse_double_field(field("tx_param"), "tx_param");
  r.eve_process = field("eve_process");
  r.eve_param = parse_double_field(field("eve_param"), "eve_param");
  r.strategy = field("strategy");
  r.beta = parse_double_field(field("beta"), "beta");
  r.trials = parse_count_field(field("trials"), "trials");
  r.seed = parse_count_field(field("seed"), "seed");
  r.p_hat = parse_double_field(field("p_hat"), "p_hat");
  r.ci_half_width =
      parse_double_field(field("ci_half_width"), "ci_half_width");
  const auto& bound_text = field("bound");
  if (!bound_text.empty()) {
    r.bound = parse_double_field(bound_text, "bound");
  }
  r.bound_kind = field("bound_kind");
  if (r.bound.has_value() == r.bound_kind.empty()) {
    throw std::invalid_argument("csv: bound and bound_kind must be present "
                                "or absent together");
  }
  return r;
}

std::optional<BoundResult> closed_form_bound(const Scenario& scenario) {
  if (scenario.strategy.strategy != Strategy::CoopTransmit) {
    return std::nullopt;
  }
  const auto& tx = scenario.tx_process;
  const auto& eve = scenario.eve_process;
  if (tx.family == ProcessFamily::Iud &&
      eve.family == ProcessFamily::Iud) {
    if (tx.count() == 0) return std::nullopt;
    if (tx.count() == 1) return exact_single_tx_iud_eve(eve.count());
    return ub_iud_iud(tx.count(), eve.count());
  }
  if (tx.family == ProcessFamily::Poisson &&
      eve.family == ProcessFamily::Iud) {
    return ub_poisson_tx_iud_eve(tx.param, eve.count());
  }
  if (tx.family == ProcessFamily::Iud &&
      eve.family == ProcessFamily::Poisson && tx.count() == 1) {
    return exact_single_tx_poisson_eve(eve.param);
  }
  return std::nullopt;
}

RunRecord make_run_record(const Scenario& scenario,
                          const Estimate& estimate) {
  RunRecord r;
  r.tx_process = family_name(scenario.tx_process.family);
  r.tx_param = scenario.tx_process.param;
  r.eve_process = family_name(scenario.eve_process.family);
  r.eve_param = scenario.eve_process.param;
  r.strategy = strategy_name(scenario.strategy.strategy);
  r.beta = scenario.strategy.channel.beta;
  r.trials = estimate.trials;
  r.seed = estimate.master_seed;
  r.p_hat = estimate.p_hat;
  r.ci_half_width = estimate.ci_half_width;
  if (const auto bound = closed_form_bound(scenario)) {
    r.bound = bound->value;
    r.bound_kind = to_string(bound->kind);
  }
  return r;
}

}  // namespace coopsec
