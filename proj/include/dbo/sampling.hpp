#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dbo/exponents.hpp"
#include "dbo/sequence.hpp"

namespace dbo {

/// Deterministic unit-ball pairs on the radius-R cube: a fixed set of extreme
/// points first (scaled deltas and a phase pattern; Hoelder-extremal inputs
/// are often sparse), then complex Gaussian draws, all normalized in the
/// requested weighted norms. Pair #i depends only on (seed, i).
std::vector<std::pair<WeightedSequence, WeightedSequence>> sampleUnitPairs(int d, int radius, Exponent p,
                                                                           WeightParams wp, Exponent q,
                                                                           WeightParams wq, int samples,
                                                                           std::uint64_t seed);

/// Single normalized Gaussian draw (used by experiments that need extra data).
WeightedSequence sampleUnitSequence(int d, int radius, Exponent p, WeightParams w, std::uint64_t seed,
                                    std::uint64_t index);

}  // namespace dbo
