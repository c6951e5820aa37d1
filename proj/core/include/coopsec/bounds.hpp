#pragma once

#include <cstddef>
#include <string_view>

namespace coopsec {

enum class BoundKind { Exact, UpperBound, Asymptotic };

std::string_view to_string(BoundKind kind);

struct BoundResult {
  double value = 0.0;
  BoundKind kind = BoundKind::Exact;
};

/// Single IUD transmitter, n_e IUD eavesdroppers: P{Cs>0} = 1/(1+n_e).
BoundResult exact_single_tx_iud_eve(std::size_t n_e);

/// n_t IUD transmitters, n_e IUD eavesdroppers:
/// P{Cs>0} <= 1 - (n_e/(1+n_e))^n_t. Requires n_t >= 1.
BoundResult ub_iud_iud(std::size_t n_t, std::size_t n_e);

/// Large-network limit of ub_iud_iud at fixed ratio k = n_t/n_e: 1 - e^-k.
BoundResult ub_asymptotic(double k);

/// Poisson transmitters (rate lambda_t), n_e IUD eavesdroppers:
/// P{Cs>0} <= 1 - e^(-lambda_t/(1+n_e)).
BoundResult ub_poisson_tx_iud_eve(double lambda_t, std::size_t n_e);

/// Single IUD transmitter, Poisson eavesdroppers:
/// P{Cs>0} = (1/lambda_e)(1 - e^-lambda_e), extended by its limit 1 at 0.
BoundResult exact_single_tx_poisson_eve(double lambda_e);

}  // namespace coopsec
