#include "stepup/sigma.hpp"

#include "stepup/errors.hpp"

#include <bit>
#include <optional>
#include <unordered_set>

namespace stepup {

u128 SigmaParams::palette_bound() const
{
    const u128 mm = static_cast<u128>(m) * static_cast<u128>(m);
    return mm << (2 * t);
}

namespace {

std::optional<int> minimal_length(std::uint64_t n, int t)
{
    for (int m = t + 1; m <= max_vector_length; ++m) {
        if (choose_wide(m, t) >= n)
            return m;
    }
    return std::nullopt;
}

} // namespace

SigmaParams params_with_weight(std::uint64_t n, int t)
{
    if (n < 2)
        throw RangeError("sigma needs n >= 2");
    if (t < 1 || t >= max_vector_length)
        throw RangeError("weight t out of range");
    const auto m = minimal_length(n, t);
    if (!m)
        throw CapacityError("no m <= 64 with C(m, " + std::to_string(t) + ") >= " + std::to_string(n));
    return SigmaParams{n, t, *m, choose(*m, t)};
}

SigmaParams select_params(std::uint64_t n)
{
    if (n < 2)
        throw RangeError("sigma needs n >= 2");
    // For t > m/2 the complementary weight m - t reaches C(m, t) with no larger
    // m and a strictly smaller bound, so t <= 32 covers every optimum.
    std::optional<SigmaParams> best;
    for (int t = 1; t <= max_vector_length / 2; ++t) {
        const auto m = minimal_length(n, t);
        if (!m)
            continue;
        SigmaParams cand{n, t, *m, 0};
        if (!best || cand.palette_bound() < best->palette_bound())
            best = cand;
    }
    if (!best)
        throw CapacityError("n = " + std::to_string(n) + " needs vectors longer than 64");
    best->n_prime = choose(best->m, best->t);
    return *best;
}

SigmaParams params_for_binomial(int m, int t)
{
    if (m < 2 || m > max_vector_length || t < 1 || t >= m)
        throw DimensionError("need 1 <= t < m <= 64");
    const std::uint64_t n = choose(m, t);
    return SigmaParams{n, t, m, n};
}

std::size_t SigmaColorHash::operator()(const SigmaColor& c) const noexcept
{
    std::uint64_t h = static_cast<std::uint64_t>(c.c1) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(c.c2) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= c.c3 + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= c.c4 + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

std::uint64_t f_B(std::uint64_t b_mask, std::uint64_t a_mask, int m)
{
    if ((a_mask & ~b_mask) != 0)
        throw DomainError("f_B: A is not a subset of B");
    std::uint64_t value = 0;
    int k = 0;
    // b_1 < b_2 < ... in position order, i.e. from the most significant bit down.
    for (int pos = 1; pos <= m; ++pos) {
        const std::uint64_t bit = std::uint64_t{1} << (m - pos);
        if (b_mask & bit) {
            if (a_mask & bit)
                value |= std::uint64_t{1} << k;
            ++k;
        }
    }
    return value + 1;
}

SigmaColor sigma_color(const VertexVec& v, const VertexVec& w)
{
    const auto ord = compare(v, w);
    if (ord == std::strong_ordering::equal)
        throw DegenerateError("sigma_color: v == w");
    if (ord == std::strong_ordering::greater)
        throw OrderError("sigma_color: requires v < w");
    const int m = v.length();
    const std::uint64_t vb = v.bits();
    const std::uint64_t wb = w.bits();
    // Positions are 1-based from the top bit; the first set bit of a mask
    // aligned to m bits lies at position countl_zero - (64 - m) + 1.
    auto first_position = [m](std::uint64_t mask) {
        return std::countl_zero(mask) - (64 - m) + 1;
    };
    const std::uint64_t up = ~vb & wb;   // v(i)=0, w(i)=1
    const int c1 = first_position(up);
    const std::uint64_t below_c1 = (c1 == m) ? 0 : ((std::uint64_t{1} << (m - c1)) - 1);
    const std::uint64_t down = vb & ~wb & below_c1; // v(j)=1, w(j)=0, j > c1
    // Equal weights guarantee such a j exists once v < w.
    const int c2 = first_position(down);
    const std::uint64_t common = vb & wb;
    return SigmaColor{c1, c2, f_B(vb, common, m), f_B(wb, common, m)};
}

std::vector<VertexVec> sigma_vertices(const SigmaParams& params)
{
    std::vector<VertexVec> out;
    out.reserve(params.n_requested);
    VertexVec v = unrank(0, params.m, params.t);
    out.push_back(v);
    std::uint64_t bits = v.bits();
    for (std::uint64_t r = 1; r < params.n_requested; ++r) {
        // Next integer with the same popcount.
        const std::uint64_t low = bits & (~bits + 1);
        const std::uint64_t ripple = bits + low;
        bits = ripple | (((bits ^ ripple) >> 2) / low);
        out.emplace_back(bits, params.m, params.t);
    }
    return out;
}

SigmaColor sigma_edge(std::uint64_t i, std::uint64_t j, const SigmaParams& params)
{
    if (i == j)
        throw RangeError("sigma_edge: loop edge");
    if (i < 1 || j < 1 || i > params.n_requested || j > params.n_requested)
        throw RangeError("sigma_edge: label out of range");
    if (i > j)
        std::swap(i, j);
    return sigma_color(unrank(i - 1, params.m, params.t), unrank(j - 1, params.m, params.t));
}

std::uint64_t sigma_palette(const SigmaParams& params)
{
    const auto verts = sigma_vertices(params);
    std::unordered_set<SigmaColor, SigmaColorHash> seen;
    for (std::size_t j = 1; j < verts.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
            seen.insert(sigma_color(verts[i], verts[j]));
    return seen.size();
}

} // namespace stepup
