#include "stepup/combinat.hpp"

#include "stepup/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace stepup {

std::string to_string(u128 value)
{
    if (value == 0)
        return "0";
    std::string digits;
    while (value != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

VertexVec::VertexVec(std::uint64_t bits, int m, int t) : bits_(bits), m_(m), t_(t)
{
    if (m < 2 || m > max_vector_length)
        throw DimensionError("vector length must be in [2, 64], got " + std::to_string(m));
    if (t < 1 || t >= m)
        throw DimensionError("weight must satisfy 1 <= t < m, got t=" + std::to_string(t));
    if (m < 64 && (bits >> m) != 0)
        throw DimensionError("bits set beyond vector length");
    if (std::popcount(bits) != t)
        throw DimensionError("vector weight differs from t");
}

VertexVec VertexVec::from_bits(std::uint64_t bits, int m)
{
    return VertexVec(bits, m, std::popcount(bits));
}

VertexVec VertexVec::parse(std::string_view text)
{
    if (text.empty() || text.size() > static_cast<std::size_t>(max_vector_length))
        throw DimensionError("vector string must have length 2..64");
    std::uint64_t bits = 0;
    for (char ch : text) {
        if (ch != '0' && ch != '1')
            throw DimensionError("vector string must contain only 0 and 1");
        bits = (bits << 1) | static_cast<std::uint64_t>(ch - '0');
    }
    return from_bits(bits, static_cast<int>(text.size()));
}

int VertexVec::at(int i) const
{
    if (i < 1 || i > m_)
        throw RangeError("coordinate out of range");
    return static_cast<int>((bits_ >> (m_ - i)) & 1u);
}

std::string VertexVec::str() const
{
    std::string s(static_cast<std::size_t>(m_), '0');
    for (int i = 1; i <= m_; ++i)
        if (at(i))
            s[static_cast<std::size_t>(i - 1)] = '1';
    return s;
}

std::strong_ordering compare(const VertexVec& v, const VertexVec& w)
{
    if (v.length() != w.length() || v.weight() != w.weight())
        throw DimensionError("compare: vectors differ in length or weight");
    return v.bits() <=> w.bits();
}

namespace {

// C(m, t) for 0 <= t <= m, saturating at the maximum u128 value.
u128 choose_saturating(std::uint64_t m, std::uint64_t t, bool& overflow)
{
    overflow = false;
    if (t > m)
        return 0;
    t = std::min(t, m - t);
    constexpr u128 max128 = std::numeric_limits<u128>::max();
    u128 r = 1;
    for (std::uint64_t i = 0; i < t; ++i) {
        // r = C(m, i); C(m, i+1) = r * (m - i) / (i + 1), exact at every step.
        const u128 factor = m - i;
        if (r > max128 / factor) {
            // Divide first using gcd-free splitting: r * factor / (i+1)
            const u128 d = i + 1;
            const u128 q = r / d;
            const u128 rem = r % d;
            // r*factor/d = q*factor + rem*factor/d
            if (q > max128 / factor) {
                overflow = true;
                return max128;
            }
            const u128 hi = q * factor;
            const u128 lo = rem * factor / d;
            if (hi > max128 - lo) {
                overflow = true;
                return max128;
            }
            r = hi + lo;
        } else {
            r = r * factor / (i + 1);
        }
    }
    return r;
}

} // namespace

u128 choose_wide(std::int64_t m, std::int64_t t)
{
    if (m < 0 || t < 0)
        throw RangeError("choose: negative argument");
    if (t > m)
        return 0;
    bool overflow = false;
    const u128 r = choose_saturating(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(t), overflow);
    if (overflow)
        throw OverflowError("choose(" + std::to_string(m) + ", " + std::to_string(t) + ") exceeds 128 bits");
    return r;
}

std::uint64_t choose(std::int64_t m, std::int64_t t)
{
    const u128 r = choose_wide(m, t);
    if (r > std::numeric_limits<std::uint64_t>::max())
        throw OverflowError("choose(" + std::to_string(m) + ", " + std::to_string(t) + ") exceeds 64 bits");
    return static_cast<std::uint64_t>(r);
}

VertexVec unrank(std::uint64_t r, int m, int t)
{
    if (m < 2 || m > max_vector_length || t < 1 || t >= m)
        throw DimensionError("unrank: need 1 <= t < m <= 64");
    if (r >= choose(m, t))
        throw RangeError("unrank: rank " + std::to_string(r) + " out of range");
    std::uint64_t bits = 0;
    int ones = t;
    // Walk from the most significant position. With `len` positions left and
    // `ones` ones to place, C(len-1, ones) vectors keep a 0 here.
    for (int len = m; len > 0 && ones > 0; --len) {
        const std::uint64_t zeros_here = choose(len - 1, ones);
        if (r >= zeros_here) {
            r -= zeros_here;
            bits |= std::uint64_t{1} << (len - 1);
            --ones;
        }
    }
    return VertexVec(bits, m, t);
}

std::uint64_t rank(const VertexVec& v)
{
    std::uint64_t r = 0;
    int ones = v.weight();
    for (int len = v.length(); len > 0 && ones > 0; --len) {
        if ((v.bits() >> (len - 1)) & 1u) {
            r += choose(len - 1, ones);
            --ones;
        }
    }
    return r;
}

u128 colex_rank(std::span<const std::uint64_t> subset)
{
    u128 r = 0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i > 0 && subset[i] <= subset[i - 1])
            throw OrderError("colex_rank: subset must be strictly increasing");
        r += choose_wide(static_cast<std::int64_t>(subset[i]), static_cast<std::int64_t>(i + 1));
    }
    return r;
}

void colex_unrank(u128 r, std::span<std::uint64_t> out)
{
    std::uint64_t upper = std::numeric_limits<std::uint64_t>::max(); // exclusive bound
    for (std::size_t idx = out.size(); idx-- > 0;) {
        const std::uint64_t i = idx + 1;
        // Largest c < upper with C(c, i) <= r. C(i-1, i) = 0 so c >= i-1.
        std::uint64_t lo = i - 1;
        std::uint64_t hi = lo + 1;
        bool overflow = false;
        if (upper == std::numeric_limits<std::uint64_t>::max()) {
            while (true) {
                const u128 c = choose_saturating(hi, i, overflow);
                if (c > r)
                    break;
                lo = hi;
                if (hi > (std::numeric_limits<std::uint64_t>::max() >> 1))
                    throw RangeError("colex_unrank: rank too large");
                hi *= 2;
            }
        } else {
            hi = upper;
        }
        // Invariant: C(lo, i) <= r < C(hi, i).
        while (hi - lo > 1) {
            const std::uint64_t mid = lo + (hi - lo) / 2;
            if (choose_saturating(mid, i, overflow) <= r)
                lo = mid;
            else
                hi = mid;
        }
        out[idx] = lo;
        r -= choose_saturating(lo, i, overflow);
        upper = lo;
    }
}

bool next_colex(std::span<std::uint64_t> s, std::uint64_t n)
{
    const std::size_t k = s.size();
    for (std::size_t i = 0; i < k; ++i) {
        const std::uint64_t limit = (i + 1 < k) ? s[i + 1] : n;
        if (s[i] + 1 < limit) {
            ++s[i];
            for (std::size_t j = 0; j < i; ++j)
                s[j] = j;
            return true;
        }
    }
    return false;
}

int ceil_log2(std::uint64_t x)
{
    if (x <= 1)
        return 0;
    return 64 - std::countl_zero(x - 1);
}

} // namespace stepup
