#include "hardy/random.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace hardy {
namespace {

// 53 random mantissa bits -> [0, 1).
double unit_interval(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

CompactSequence draw_sequence(std::uint64_t seed, Index max_support, double lower, double upper) {
  if (max_support == 0) throw std::invalid_argument("max_support must be >= 1");
  if (!(upper >= lower)) throw std::invalid_argument("empty value range");
  std::mt19937_64 engine(seed);
  const Index support = static_cast<Index>(engine() % max_support) + 1;
  std::vector<double> values(support);
  for (double& v : values) v = lower + (upper - lower) * unit_interval(engine());
  return CompactSequence(std::move(values));
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) { return mix64(mix64(master) ^ mix64(~index)); }

CompactSequence random_test_sequence(std::uint64_t seed, Index max_support, double amplitude) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
  return draw_sequence(seed, max_support, -amplitude, amplitude);
}

CompactSequence random_nonnegative_sequence(std::uint64_t seed, Index max_support, double amplitude) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
  return draw_sequence(seed, max_support, 0.0, amplitude);
}

WeightFunction random_positive_weight(std::uint64_t seed, double lower, double upper) {
  if (!(lower > 0.0) || !(upper >= lower)) throw std::invalid_argument("random weight range must satisfy 0 < lower <= upper");
  return WeightFunction(
      [seed, lower, upper](Index n) { return lower + (upper - lower) * unit_interval(derive_seed(seed, n)); }, {},
      "random");
}

}  // namespace hardy
