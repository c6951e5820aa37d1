#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coopsec/secrecy.hpp"

namespace coopsec {

using Key256 = std::array<std::uint8_t, 32>;

/// Ordered blocks of a pre-secret; concatenating them in order restores the
/// original message exactly.
struct BlockSet {
  std::vector<std::vector<std::uint8_t>> blocks;
};

struct ExchangeOutcome {
  Key256 receiver_key{};
  std::optional<Key256> adversary_key;  // present iff every block leaked
  std::vector<bool> intercepted;        // one flag per block
  bool secure = false;                  // some block stayed private
};

/// Contiguous split into n_blocks pieces; the first (size mod n_blocks)
/// pieces carry one extra octet. Throws std::invalid_argument when n_blocks
/// is zero or exceeds the message length.
BlockSet split_presecret(std::span<const std::uint8_t> pre_secret,
                         std::size_t n_blocks);

Key256 sha256(std::span<const std::uint8_t> data);

/// SHA-256 over the blocks' concatenation.
Key256 derive_key(const BlockSet& blocks);

/// Runs the cooperative exchange: transmitter i sends block i at a rate only
/// achievable strictly inside its secrecy disk, so the block leaks iff some
/// eavesdropper is at most as far from transmitter i as the receiver is. The
/// exchange is secure iff at least one block stays private, which holds
/// exactly when covered(deployment) does. Throws std::invalid_argument with
/// no transmitters or a pre-secret shorter than the transmitter count.
ExchangeOutcome simulate_exchange(const Deployment& deployment,
                                  std::span<const std::uint8_t> pre_secret);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace coopsec
