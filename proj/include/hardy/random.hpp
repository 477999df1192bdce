#pragma once

// Seeded generators for test sequences and weights. Every draw is a pure
// function of its arguments: the bit stream is std::mt19937_64 (fully
// specified by the standard) and the conversions to integers and reals are
// done here rather than through the implementation-defined std
// distributions, so output is identical across platforms.

#include <cstdint>

#include "hardy/compact_sequence.hpp"
#include "hardy/weight_function.hpp"

namespace hardy {

/// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Independent stream seed for item `index` under `master`.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Support bound uniform in 1..max_support, values i.i.d. uniform in
/// [-amplitude, amplitude].
CompactSequence random_test_sequence(std::uint64_t seed, Index max_support, double amplitude);

/// As random_test_sequence but with values uniform in [0, amplitude].
CompactSequence random_nonnegative_sequence(std::uint64_t seed, Index max_support, double amplitude);

/// u(n) uniform in [lower, upper] (0 < lower <= upper), drawn by hashing
/// (seed, n), so it is defined on all of N without storage.
WeightFunction random_positive_weight(std::uint64_t seed, double lower, double upper);

}  // namespace hardy
