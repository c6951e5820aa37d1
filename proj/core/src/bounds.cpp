#include "coopsec/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coopsec {

namespace {

void require_nonnegative(double value, const char* what) {
  if (!(value >= 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be nonnegative");
  }
}

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::Exact: return "exact";
    case BoundKind::UpperBound: return "upper-bound";
    case BoundKind::Asymptotic: return "asymptotic";
  }
  throw std::logic_error("to_string: unknown bound kind");
}

BoundResult exact_single_tx_iud_eve(std::size_t n_e) {
  return {1.0 / (1.0 + static_cast<double>(n_e)), BoundKind::Exact};
}

BoundResult ub_iud_iud(std::size_t n_t, std::size_t n_e) {
  if (n_t < 1) {
    throw std::invalid_argument("ub_iud_iud: need at least one transmitter");
  }
  // (n_e/(1+n_e))^n_t written as exp(-n_t log1p(1/n_e)) stays accurate for
  // counts like 10^5 where the base is within ulps of 1. At n_e = 0 the
  // 1/n_e = inf chain collapses to the right answer, 1.
  const double exponent = static_cast<double>(n_t) *
                          std::log1p(1.0 / static_cast<double>(n_e));
  return {-std::expm1(-exponent), BoundKind::UpperBound};
}

BoundResult ub_asymptotic(double k) {
  require_nonnegative(k, "ub_asymptotic: k");
  return {-std::expm1(-k), BoundKind::Asymptotic};
}

BoundResult ub_poisson_tx_iud_eve(double lambda_t, std::size_t n_e) {
  require_nonnegative(lambda_t, "ub_poisson_tx_iud_eve: lambda_t");
  const double exponent = lambda_t / (1.0 + static_cast<double>(n_e));
  return {-std::expm1(-exponent), BoundKind::UpperBound};
}

BoundResult exact_single_tx_poisson_eve(double lambda_e) {
  require_nonnegative(lambda_e, "exact_single_tx_poisson_eve: lambda_e");
  if (lambda_e == 0.0) return {1.0, BoundKind::Exact};
  return {-std::expm1(-lambda_e) / lambda_e, BoundKind::Exact};
}

}  // namespace coopsec
