#pragma once

// Seeded subset sampling. Draw j of a stream is a pure function of
// (seed, j), so any implementation reproduces the same sample.
//
//   word(seed, c) = splitmix64 finalizer applied to seed + (c + 1) * 0x9E3779B97F4A7C15
//   total = C(N, p)
//   if total <= 2^64:  rank_j = word(seed, j) mod total
//   else:              rank_j = (word(seed, 2j) * 2^64 + word(seed, 2j + 1)) mod total
//
// Ranks already drawn are discarded; the sample is the first `count`
// distinct ranks of the stream, each decoded as a colex-ranked p-subset.

#include "stepup/combinat.hpp"

#include <cstdint>
#include <vector>

namespace stepup {

std::uint64_t counter_word(std::uint64_t seed, std::uint64_t counter) noexcept;

class SubsetSampler {
public:
    /// ParameterError if count > C(N, p); CapacityError if C(N, p) >= 2^128.
    SubsetSampler(std::uint64_t n_vertices, int p, std::uint64_t count, std::uint64_t seed);

    /// Appends up to `max_batch` further distinct ranks to `out` (cleared
    /// first). Returns false once the full sample has been produced.
    bool next_batch(std::vector<u128>& out, std::size_t max_batch);

    u128 total() const noexcept { return total_; }
    std::uint64_t produced() const noexcept { return produced_; }

private:
    u128 draw(std::uint64_t j) const noexcept;
    bool insert(u128 rank);

    std::uint64_t seed_;
    std::uint64_t count_;
    u128 total_;
    bool wide_;
    std::uint64_t next_draw_ = 0;
    std::uint64_t produced_ = 0;
    // Open-addressing set of drawn ranks; slot value rank + 1, 0 = empty.
    std::vector<u128> table_;
    std::uint64_t mask_ = 0;
};

/// The full sample in draw order. Convenience over SubsetSampler.
std::vector<u128> sample_ranks(std::uint64_t n_vertices, int p, std::uint64_t count, std::uint64_t seed);

} // namespace stepup
