#pragma once

// The 4-coordinate edge coloring of K_n whose vertices are weight-t binary
// vectors of length m. Vertex labels 1..n map to the n smallest vectors.

#include "stepup/combinat.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace stepup {

struct SigmaParams {
    std::uint64_t n_requested = 0;
    int t = 0;
    int m = 0;
    std::uint64_t n_prime = 0;

    /// m^2 * 4^t, an upper bound on the number of colors.
    u128 palette_bound() const;

    bool operator==(const SigmaParams&) const = default;
};

/// Chooses (t, m) minimizing m^2 * 4^t subject to C(m, t) >= n and m <= 64,
/// with m minimal for each t. Ties go to the smaller t. CapacityError when no
/// t admits m <= 64.
SigmaParams select_params(std::uint64_t n);

/// Parameters with t fixed and m minimal. CapacityError if m would exceed 64.
SigmaParams params_with_weight(std::uint64_t n, int t);

/// The full instance n = C(m, t).
SigmaParams params_for_binomial(int m, int t);

struct SigmaColor {
    int c1 = 0;
    int c2 = 0;
    std::uint64_t c3 = 0;
    std::uint64_t c4 = 0;

    auto operator<=>(const SigmaColor&) const = default;
};

struct SigmaColorHash {
    std::size_t operator()(const SigmaColor& c) const noexcept;
};

/// The bijection 2^B -> {1..2^t}: with B = {b_1 < ... < b_t}, returns
/// 1 + sum over b_k in A of 2^(k-1). Sets are given as bit masks in the same
/// encoding as VertexVec (position 1 = most significant of m bits).
/// DomainError if A is not a subset of B.
std::uint64_t f_B(std::uint64_t b_mask, std::uint64_t a_mask, int m);

/// Color of the edge vw, v < w. OrderError if v > w, DegenerateError if v == w.
SigmaColor sigma_color(const VertexVec& v, const VertexVec& w);

/// Color of the edge {i, j} for 1-based labels; the pair is sorted first.
/// RangeError if i == j or either label is outside [1, n_requested].
SigmaColor sigma_edge(std::uint64_t i, std::uint64_t j, const SigmaParams& params);

/// Number of distinct colors over all C(n, 2) edges.
std::uint64_t sigma_palette(const SigmaParams& params);

/// Vertices 1..n_requested as vectors, index 0 holding label 1.
std::vector<VertexVec> sigma_vertices(const SigmaParams& params);

} // namespace stepup
