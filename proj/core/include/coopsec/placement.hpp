#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coopsec/geometry.hpp"
#include "coopsec/rng.hpp"

namespace coopsec {

enum class ProcessFamily { Iud, Poisson, HexLattice, SquareLattice };

std::string_view family_name(ProcessFamily family);

/// One spatial point process: a family plus its single parameter
/// (fixed count for IUD and the lattices, rate for Poisson).
struct ProcessSpec {
  ProcessFamily family = ProcessFamily::Iud;
  double param = 0.0;

  /// Throws std::invalid_argument if param is negative, non-finite, or a
  /// non-integer for a count family.
  void validate() const;

  bool is_count_family() const {
    return family != ProcessFamily::Poisson;
  }

  /// Point count for count families; call validate() first.
  std::size_t count() const;

  /// Parses the textual form `iud:<n>`, `poisson:<rate>`, `hex:<n>`,
  /// `square:<n>`. Throws std::invalid_argument on malformed input.
  static ProcessSpec parse(std::string_view text);

  /// Inverse of parse(); emits the same textual form.
  std::string to_string() const;

  friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

/// Exactly n independent uniform points. Prefix-stable: with equal seeds the
/// first k points of sample_iud(n) and sample_iud(m), k <= min(n, m), agree
/// bitwise, which lets tests couple deployments that differ only in count.
std::vector<Point> sample_iud(std::size_t n, Region region, SeedStream seed);

/// Homogeneous Poisson process: count ~ Poisson(rate * area), then that many
/// uniform points.
std::vector<Point> sample_poisson(double rate, Region region, SeedStream seed);

/// Deterministic triangular-packing lattice of exactly n points: alternate
/// rows offset by half the horizontal pitch, vertical pitch (sqrt(3)/2) times
/// the horizontal pitch, pattern centered in the region.
std::vector<Point> hex_lattice(std::size_t n, Region region);

/// Deterministic grid of exactly n cell centers, row-major with y ascending.
std::vector<Point> square_lattice(std::size_t n, Region region);

/// Dispatches on spec.family; seed is ignored by the lattices.
std::vector<Point> sample_process(const ProcessSpec& spec, Region region,
                                  SeedStream seed);

}  // namespace coopsec
