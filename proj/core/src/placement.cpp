#include "coopsec/placement.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace coopsec {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("process spec: bad parameter in '" +
                                std::string(whole) + "'");
  }
  return value;
}

// Rows/columns for laying n points out on a near-square grid; surplus
// beyond n is dropped from the last row by the emitters.
struct GridShape {
  std::size_t rows = 1;
  std::size_t cols = 1;
};

GridShape grid_shape(std::size_t n) {
  auto rows = static_cast<std::size_t>(
      std::lround(std::sqrt(static_cast<double>(n))));
  if (rows < 1) rows = 1;
  if (rows > n) rows = n;
  std::size_t cols = (n + rows - 1) / rows;
  while (rows > 1 && cols * (rows - 1) >= n) --rows;
  return {rows, cols};
}

// Exact Poisson draw by CDF inversion; intended for small means. The pmf
// guard stops the scan once the terms underflow, which can otherwise leave
// the accumulated CDF just below u forever.
std::uint64_t poisson_small(double mean, Pcg32& rng) {
  if (mean <= 0.0) return 0;
  const double u = rng.next_double();
  double pmf = std::exp(-mean);
  double cdf = pmf;
  std::uint64_t k = 0;
  while (u >= cdf && pmf > 1e-300) {
    ++k;
    pmf *= mean / static_cast<double>(k);
    cdf += pmf;
  }
  return k;
}

// Poisson(a + b) = Poisson(a) + Poisson(b) for independent draws, so large
// means split into chunks the small-mean sampler handles accurately.
std::uint64_t poisson_count(double mean, Pcg32& rng) {
  constexpr double kChunk = 30.0;
  std::uint64_t total = 0;
  while (mean > kChunk) {
    total += poisson_small(kChunk, rng);
    mean -= kChunk;
  }
  total += poisson_small(mean, rng);
  return total;
}

void append_uniform(std::vector<Point>& out, std::size_t n, Pcg32& rng) {
  out.reserve(out.size() + n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.next_double();
    const double y = rng.next_double();
    out.push_back(Point{x, y});
  }
}

}  // namespace

std::string_view family_name(ProcessFamily family) {
  switch (family) {
    case ProcessFamily::Iud: return "iud";
    case ProcessFamily::Poisson: return "poisson";
    case ProcessFamily::HexLattice: return "hex";
    case ProcessFamily::SquareLattice: return "square";
  }
  throw std::logic_error("family_name: unknown family");
}

void ProcessSpec::validate() const {
  if (!std::isfinite(param) || param < 0.0) {
    throw std::invalid_argument("process spec: parameter must be finite and "
                                "nonnegative, got " + std::to_string(param));
  }
  if (is_count_family() && param != std::floor(param)) {
    throw std::invalid_argument("process spec: " +
                                std::string(family_name(family)) +
                                " needs an integer count, got " +
                                std::to_string(param));
  }
}

std::size_t ProcessSpec::count() const {
  return static_cast<std::size_t>(param);
}

ProcessSpec ProcessSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("process spec: expected family:param, got '" +
                                std::string(text) + "'");
  }
  const auto name = text.substr(0, colon);
  ProcessSpec spec;
  if (name == "iud") {
    spec.family = ProcessFamily::Iud;
  } else if (name == "poisson") {
    spec.family = ProcessFamily::Poisson;
  } else if (name == "hex") {
    spec.family = ProcessFamily::HexLattice;
  } else if (name == "square") {
    spec.family = ProcessFamily::SquareLattice;
  } else {
    throw std::invalid_argument("process spec: unknown family '" +
                                std::string(name) + "'");
  }
  spec.param = parse_real(text.substr(colon + 1), text);
  spec.validate();
  return spec;
}

std::string ProcessSpec::to_string() const {
  char buf[48];
  if (is_count_family()) {
    std::snprintf(buf, sizeof buf, "%s:%zu", family_name(family).data(),
                  count());
  } else {
    std::snprintf(buf, sizeof buf, "%s:%.12g", family_name(family).data(),
                  param);
  }
  return buf;
}

std::vector<Point> sample_iud(std::size_t n, Region /*region*/,
                              SeedStream seed) {
  Pcg32 rng(seed);
  std::vector<Point> points;
  append_uniform(points, n, rng);
  return points;
}

std::vector<Point> sample_poisson(double rate, Region region,
                                  SeedStream seed) {
  if (!(rate >= 0.0)) {
    throw std::invalid_argument("sample_poisson: rate must be nonnegative");
  }
  Pcg32 rng(seed);
  const auto n = poisson_count(rate * region.area(), rng);
  std::vector<Point> points;
  append_uniform(points, static_cast<std::size_t>(n), rng);
  return points;
}

std::vector<Point> hex_lattice(std::size_t n, Region /*region*/) {
  std::vector<Point> points;
  if (n == 0) return points;
  const double root3 = std::sqrt(3.0);
  const auto [rows, cols] = grid_shape(n);
  // Unit-pitch pattern: alternate rows offset by half a pitch, row spacing
  // sqrt(3)/2 of the pitch.
  points.reserve(n);
  double span_x = 0.0;
  for (std::size_t j = 0; j < rows && points.size() < n; ++j) {
    const double stagger = (j % 2 == 1) ? 0.5 : 0.0;
    for (std::size_t i = 0; i < cols && points.size() < n; ++i) {
      const double x = static_cast<double>(i) + stagger;
      points.push_back(Point{x, static_cast<double>(j) * (root3 / 2.0)});
      span_x = std::max(span_x, x);
    }
  }
  // Largest pitch that keeps the pattern inside the unit square; the
  // triangular-packing ratio is rigid, so one scale serves both axes.
  const double span_y = static_cast<double>(rows - 1) * (root3 / 2.0);
  double pitch = 1.0;
  if (span_x > 0.0) pitch = 1.0 / span_x;
  if (span_y > 0.0) pitch = std::min(pitch, 1.0 / span_y);
  double min_x = points[0].x * pitch, max_x = min_x;
  double min_y = points[0].y * pitch, max_y = min_y;
  for (auto& p : points) {
    p.x *= pitch;
    p.y *= pitch;
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double dx = 0.5 - (min_x + max_x) / 2.0;
  const double dy = 0.5 - (min_y + max_y) / 2.0;
  for (auto& p : points) {
    p.x += dx;
    p.y += dy;
  }
  return points;
}

std::vector<Point> square_lattice(std::size_t n, Region /*region*/) {
  std::vector<Point> points;
  if (n == 0) return points;
  const auto [rows, cols] = grid_shape(n);
  points.reserve(n);
  for (std::size_t j = 0; j < rows && points.size() < n; ++j) {
    for (std::size_t i = 0; i < cols && points.size() < n; ++i) {
      points.push_back(
          Point{(static_cast<double>(i) + 0.5) / static_cast<double>(cols),
                (static_cast<double>(j) + 0.5) / static_cast<double>(rows)});
    }
  }
  return points;
}

std::vector<Point> sample_process(const ProcessSpec& spec, Region region,
                                  SeedStream seed) {
  spec.validate();
  switch (spec.family) {
    case ProcessFamily::Iud:
      return sample_iud(spec.count(), region, seed);
    case ProcessFamily::Poisson:
      return sample_poisson(spec.param, region, seed);
    case ProcessFamily::HexLattice:
      return hex_lattice(spec.count(), region);
    case ProcessFamily::SquareLattice:
      return square_lattice(spec.count(), region);
  }
  throw std::logic_error("sample_process: unknown family");
}

}  // namespace coopsec
