#pragma once

// Stepping up: the 3-graph coloring on {0,1}^n induced by sigma on K_n.
// A triple u < v < w gets (sigma(gamma(u,v), gamma(v,w)), delta(u,v,w)).

#include "stepup/sigma.hpp"

#include <compare>
#include <cstdint>

namespace stepup {

/// A vertex of {0,1}^n. Coordinate i (1-based) is bit n - i of value.
class HVertex {
public:
    /// Throws RangeError unless 1 <= n <= 64 and value < 2^n.
    HVertex(std::uint64_t value, int n);

    std::uint64_t value() const noexcept { return value_; }
    int bits() const noexcept { return n_; }
    int at(int i) const;

    bool operator==(const HVertex&) const = default;

private:
    std::uint64_t value_;
    int n_;
};

/// First coordinate in [n] where x and y differ. DegenerateError if x == y,
/// DimensionError if the bit lengths differ.
int gamma(const HVertex& x, const HVertex& y);

/// +1 iff gamma(x, y) < gamma(y, z). OrderError unless x < y < z.
int delta(const HVertex& x, const HVertex& y, const HVertex& z);

struct ChiColor {
    SigmaColor base;
    int delta = 1;

    auto operator<=>(const ChiColor&) const = default;
};

/// Color of the triple {u, v, w} (any order; sorted first). params must be
/// built for at least n = u.bits() vertices, else CapacityError.
/// OrderError if two of the vertices coincide.
ChiColor chi_color(HVertex u, HVertex v, HVertex w, const SigmaParams& params);

/// Bit length of the smallest power of two >= N. N >= 2.
int lift_size(std::uint64_t N);

/// Sigma parameters used for the lift of N vertices: select_params applied
/// to max(2, lift_size(N)).
SigmaParams chi_params(std::uint64_t N);

// Value-level helpers used on hot paths; vertices are raw integers < 2^n.
inline int gamma_raw(std::uint64_t x, std::uint64_t y, int n) noexcept
{
    // Highest differing bit b (0-based from the bottom) is coordinate n - b.
    return n - (63 - __builtin_clzll(x ^ y));
}

} // namespace stepup
