#include "coopsec/keyexchange.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace coopsec {

BlockSet split_presecret(std::span<const std::uint8_t> pre_secret,
                         std::size_t n_blocks) {
  if (n_blocks == 0) {
    throw std::invalid_argument("split_presecret: need at least one block");
  }
  if (pre_secret.size() < n_blocks) {
    throw std::invalid_argument(
        "split_presecret: pre-secret shorter than block count");
  }
  const std::size_t small = pre_secret.size() / n_blocks;
  const std::size_t n_large = pre_secret.size() % n_blocks;
  BlockSet out;
  out.blocks.reserve(n_blocks);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < n_blocks; ++i) {
    const std::size_t len = small + (i < n_large ? 1 : 0);
    const auto piece = pre_secret.subspan(offset, len);
    out.blocks.emplace_back(piece.begin(), piece.end());
    offset += len;
  }
  return out;
}

Key256 sha256(std::span<const std::uint8_t> data) {
  static const std::uint8_t empty = 0;
  Key256 digest{};
  unsigned int written = 0;
  const std::uint8_t* ptr = data.empty() ? &empty : data.data();
  if (EVP_Digest(ptr, data.size(), digest.data(), &written, EVP_sha256(),
                 nullptr) != 1 ||
      written != digest.size()) {
    throw std::runtime_error("sha256: digest failed");
  }
  return digest;
}

Key256 derive_key(const BlockSet& blocks) {
  std::vector<std::uint8_t> message;
  std::size_t total = 0;
  for (const auto& b : blocks.blocks) total += b.size();
  message.reserve(total);
  for (const auto& b : blocks.blocks) {
    message.insert(message.end(), b.begin(), b.end());
  }
  return sha256(message);
}

ExchangeOutcome simulate_exchange(const Deployment& deployment,
                                  std::span<const std::uint8_t> pre_secret) {
  if (deployment.transmitters.empty()) {
    throw std::invalid_argument("simulate_exchange: no transmitters");
  }
  const auto blocks =
      split_presecret(pre_secret, deployment.transmitters.size());

  ExchangeOutcome out;
  out.intercepted.resize(blocks.blocks.size());
  bool all_leaked = true;
  for (std::size_t i = 0; i < deployment.transmitters.size(); ++i) {
    const Point t = deployment.transmitters[i];
    const bool leaked = secrecy_disk_radius(t, deployment.eavesdroppers) <=
                        distance(t, deployment.receiver);
    out.intercepted[i] = leaked;
    all_leaked = all_leaked && leaked;
  }
  out.receiver_key = derive_key(blocks);
  if (all_leaked) out.adversary_key = out.receiver_key;
  out.secure = !all_leaked;
  return out;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(bytes.size() * 2);
  for (const auto b : bytes) {
    hex.push_back(kDigits[b >> 4]);
    hex.push_back(kDigits[b & 0x0f]);
  }
  return hex;
}

}  // namespace coopsec
