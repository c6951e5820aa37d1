#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coopsec/keyexchange.hpp"
#include "oracles.hpp"

using namespace coopsec;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view text) {
  return {text.begin(), text.end()};
}

std::string block_text(const std::vector<std::uint8_t>& block) {
  return {block.begin(), block.end()};
}

std::vector<std::uint8_t> random_bytes(std::mt19937_64& gen, std::size_t n) {
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(byte(gen));
  return out;
}

}  // namespace

TEST_CASE("split_presecret produces contiguous near-even blocks") {
  const auto whole = split_presecret(bytes_of("abcdef"), 1);
  REQUIRE(whole.blocks.size() == 1);
  CHECK(block_text(whole.blocks[0]) == "abcdef");

  const auto thirds = split_presecret(bytes_of("abcdef"), 3);
  REQUIRE(thirds.blocks.size() == 3);
  CHECK(block_text(thirds.blocks[0]) == "ab");
  CHECK(block_text(thirds.blocks[1]) == "cd");
  CHECK(block_text(thirds.blocks[2]) == "ef");

  // the remainder octet goes to the earliest block
  const auto uneven = split_presecret(bytes_of("abcde"), 2);
  REQUIRE(uneven.blocks.size() == 2);
  CHECK(block_text(uneven.blocks[0]) == "abc");
  CHECK(block_text(uneven.blocks[1]) == "de");
}

TEST_CASE("split_presecret rejects impossible block counts") {
  CHECK_THROWS_AS(split_presecret(bytes_of("abc"), 0), std::invalid_argument);
  CHECK_THROWS_AS(split_presecret(bytes_of("abc"), 4), std::invalid_argument);
}

TEST_CASE("concatenating the blocks restores the pre-secret") {
  std::mt19937_64 gen(77);
  std::uniform_int_distribution<std::size_t> length(1, 64);
  for (int rep = 0; rep < 200; ++rep) {
    const auto message = random_bytes(gen, length(gen));
    std::uniform_int_distribution<std::size_t> blocks(1, message.size());
    const auto split = split_presecret(message, blocks(gen));
    std::vector<std::uint8_t> joined;
    for (const auto& b : split.blocks) {
      joined.insert(joined.end(), b.begin(), b.end());
    }
    CHECK(joined == message);
  }
}

TEST_CASE("sha256 matches the reference vectors") {
  CHECK(to_hex(sha256({})) ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(to_hex(sha256(bytes_of("abc"))) ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("derive_key hashes the concatenation") {
  const auto split = split_presecret(bytes_of("abcdef"), 3);
  CHECK(to_hex(derive_key(split)) ==
        "bef57ec7f53a6d40beb640a780a639c83bc29ac8a9816f1fc6c5c6dcd93c4721");

  std::mt19937_64 gen(909);
  for (int rep = 0; rep < 100; ++rep) {
    const auto message = random_bytes(gen, 1 + rep % 40);
    std::uniform_int_distribution<std::size_t> blocks(1, message.size());
    CHECK(derive_key(split_presecret(message, blocks(gen))) ==
          sha256(message));
  }
}

TEST_CASE("permuting unequal blocks changes the key") {
  BlockSet forward{{bytes_of("ab"), bytes_of("cd")}};
  BlockSet swapped{{bytes_of("cd"), bytes_of("ab")}};
  CHECK_FALSE(derive_key(forward) == derive_key(swapped));
}

TEST_CASE("simulate_exchange flags interception by disk membership") {
  const auto message = bytes_of("shared pre-secret");

  Deployment safe{{{0, 0}}, {{1, 0}}, {0.4, 0}};
  const auto good = simulate_exchange(safe, message);
  CHECK(good.secure);
  REQUIRE(good.intercepted.size() == 1);
  CHECK_FALSE(good.intercepted[0]);
  CHECK_FALSE(good.adversary_key.has_value());
  CHECK(good.receiver_key ==
        derive_key(split_presecret(message, 1)));

  Deployment tapped{{{0, 0}}, {{0.2, 0}}, {0.4, 0}};
  const auto bad = simulate_exchange(tapped, message);
  CHECK_FALSE(bad.secure);
  REQUIRE(bad.intercepted.size() == 1);
  CHECK(bad.intercepted[0]);
  REQUIRE(bad.adversary_key.has_value());
  CHECK(*bad.adversary_key == bad.receiver_key);
}

TEST_CASE("an eavesdropper at the receiver's exact distance intercepts") {
  // both distances are exactly 1.0 in binary64
  Deployment tie{{{0, 0}}, {{1, 0}}, {0.6, 0.8}};
  const auto outcome = simulate_exchange(tie, bytes_of("tie"));
  REQUIRE(outcome.intercepted.size() == 1);
  CHECK(outcome.intercepted[0]);
  CHECK_FALSE(outcome.secure);
}

TEST_CASE("simulate_exchange validates its inputs") {
  Deployment no_tx{{}, {{0.5, 0.5}}, {0.1, 0.1}};
  CHECK_THROWS_AS(simulate_exchange(no_tx, bytes_of("abc")),
                  std::invalid_argument);

  Deployment three_tx{{{0.1, 0.1}, {0.2, 0.2}, {0.3, 0.3}}, {}, {0.5, 0.5}};
  CHECK_THROWS_AS(simulate_exchange(three_tx, bytes_of("ab")),
                  std::invalid_argument);
}

TEST_CASE("exchange security coincides with geometric coverage") {
  std::mt19937_64 gen(20240818);
  std::uniform_int_distribution<std::size_t> tx_count(1, 20);
  std::uniform_int_distribution<std::size_t> eve_count(0, 20);
  const auto message = random_bytes(gen, 64);

  for (int rep = 0; rep < 1000; ++rep) {
    Deployment d;
    d.transmitters = oracles::random_points(gen, tx_count(gen));
    d.eavesdroppers = oracles::random_points(gen, eve_count(gen));
    d.receiver = oracles::random_points(gen, 1)[0];

    const auto outcome = simulate_exchange(d, message);
    CAPTURE(rep);
    CHECK(outcome.secure == covered(d));

    const bool some_private =
        std::any_of(outcome.intercepted.begin(), outcome.intercepted.end(),
                    [](bool leaked) { return !leaked; });
    CHECK(outcome.secure == some_private);
    CHECK(outcome.adversary_key.has_value() == !some_private);
    CHECK(outcome.receiver_key ==
          derive_key(split_presecret(message, d.transmitters.size())));
  }
}

TEST_CASE("to_hex renders lowercase big-endian octets") {
  const std::vector<std::uint8_t> bytes = {0x00, 0x0f, 0xff};
  CHECK(to_hex(bytes) == "000fff");
  CHECK(to_hex(std::span<const std::uint8_t>{}) == "");
}
