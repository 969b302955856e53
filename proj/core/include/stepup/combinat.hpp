#pragma once

// Weight-t binary vectors in binary-integer order, exact binomials, and the
// colex combinatorial number system used to address k-subsets by rank.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stepup {

using u128 = unsigned __int128;

std::string to_string(u128 value);

/// Largest supported vector length.
inline constexpr int max_vector_length = 64;

/// A 0/1 vector of length m with exactly t ones. Position 1 is the most
/// significant bit, so ordering vectors is ordering the integers they spell.
class VertexVec {
public:
    /// Throws DimensionError unless 1 <= t < m <= 64 and popcount(bits) == t.
    VertexVec(std::uint64_t bits, int m, int t);
    /// Weight is taken from the popcount; still requires 1 <= t < m.
    static VertexVec from_bits(std::uint64_t bits, int m);
    /// Parses a string such as "0011".
    static VertexVec parse(std::string_view text);

    std::uint64_t bits() const noexcept { return bits_; }
    int length() const noexcept { return m_; }
    int weight() const noexcept { return t_; }

    /// Coordinate i, 1-based, 1 = most significant.
    int at(int i) const;

    std::string str() const;

    bool operator==(const VertexVec&) const = default;

private:
    std::uint64_t bits_;
    int m_;
    int t_;
};

/// Binary-integer order; DimensionError when m or t differ.
std::strong_ordering compare(const VertexVec& v, const VertexVec& w);

/// Exact C(m, t). OverflowError if the value exceeds 2^64 - 1.
std::uint64_t choose(std::int64_t m, std::int64_t t);
/// Exact C(m, t) in 128 bits. OverflowError if the value exceeds 2^128 - 1.
u128 choose_wide(std::int64_t m, std::int64_t t);

/// The (r+1)-th weight-t vector of length m in increasing binary order.
VertexVec unrank(std::uint64_t r, int m, int t);
/// Inverse of unrank.
std::uint64_t rank(const VertexVec& v);

// Colex order on k-subsets of {0, ..., n-1}: a sorted subset
// s_0 < ... < s_{k-1} has rank sum_i C(s_i, i + 1).

/// Rank of a sorted subset in colex order.
u128 colex_rank(std::span<const std::uint64_t> subset);
/// Writes the subset of the given colex rank (k = out.size()) in ascending order.
void colex_unrank(u128 r, std::span<std::uint64_t> out);
/// Advances a sorted subset of {0..n-1} to its colex successor. Returns false
/// (leaving the subset unspecified) after the last one.
bool next_colex(std::span<std::uint64_t> subset, std::uint64_t n);

/// Ceiling of log2(x) for x >= 1.
int ceil_log2(std::uint64_t x);

} // namespace stepup
