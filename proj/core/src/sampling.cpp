#include "stepup/sampling.hpp"

#include "stepup/errors.hpp"

#include <bit>
#include <limits>

namespace stepup {

std::uint64_t counter_word(std::uint64_t seed, std::uint64_t counter) noexcept
{
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

SubsetSampler::SubsetSampler(std::uint64_t n_vertices, int p, std::uint64_t count, std::uint64_t seed)
    : seed_(seed), count_(count)
{
    if (p < 1 || static_cast<std::uint64_t>(p) > n_vertices)
        throw ParameterError("sampler: need 1 <= p <= N");
    try {
        total_ = choose_wide(static_cast<std::int64_t>(n_vertices), p);
    } catch (const OverflowError&) {
        throw CapacityError("sampler: C(N, p) does not fit in 128 bits");
    }
    if (total_ == std::numeric_limits<u128>::max())
        throw CapacityError("sampler: C(N, p) does not fit in 128 bits");
    if (static_cast<u128>(count) > total_)
        throw ParameterError("sampler: sample size exceeds the number of subsets");
    wide_ = total_ > (static_cast<u128>(1) << 64);
    const std::uint64_t slots = std::bit_ceil(std::max<std::uint64_t>(16, count + count / 2 + 1));
    table_.assign(slots, 0);
    mask_ = slots - 1;
}

u128 SubsetSampler::draw(std::uint64_t j) const noexcept
{
    if (!wide_)
        return static_cast<u128>(counter_word(seed_, j)) % total_;
    const u128 hi = counter_word(seed_, 2 * j);
    const u128 lo = counter_word(seed_, 2 * j + 1);
    return ((hi << 64) | lo) % total_;
}

bool SubsetSampler::insert(u128 rank)
{
    const u128 key = rank + 1;
    std::uint64_t h = static_cast<std::uint64_t>(rank) ^ static_cast<std::uint64_t>(rank >> 64);
    h = counter_word(0, h);
    for (std::uint64_t slot = h & mask_;; slot = (slot + 1) & mask_) {
        if (table_[slot] == 0) {
            table_[slot] = key;
            return true;
        }
        if (table_[slot] == key)
            return false;
    }
}

bool SubsetSampler::next_batch(std::vector<u128>& out, std::size_t max_batch)
{
    out.clear();
    while (produced_ < count_ && out.size() < max_batch) {
        const u128 r = draw(next_draw_++);
        if (insert(r)) {
            out.push_back(r);
            ++produced_;
        }
    }
    return !out.empty();
}

std::vector<u128> sample_ranks(std::uint64_t n_vertices, int p, std::uint64_t count, std::uint64_t seed)
{
    SubsetSampler sampler(n_vertices, p, count, seed);
    std::vector<u128> all;
    all.reserve(count);
    std::vector<u128> batch;
    while (sampler.next_batch(batch, 1 << 16))
        all.insert(all.end(), batch.begin(), batch.end());
    return all;
}

} // namespace stepup
