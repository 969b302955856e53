#pragma once

// Colorings of complete k-graphs addressed by sorted vertex tuples
// (0-based labels). Each exposes uniformity(), vertex_count() and
// color_of(edge) -> opaque 64-bit id, which is all the verifier needs.

#include "stepup/chi.hpp"
#include "stepup/sigma.hpp"

#include <concepts>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace stepup {

template <class C>
concept EdgeColoring = requires(const C& c, std::span<const std::uint64_t> edge) {
    { c.uniformity() } -> std::convertible_to<int>;
    { c.vertex_count() } -> std::convertible_to<std::uint64_t>;
    { c.color_of(edge) } -> std::convertible_to<std::uint64_t>;
};

/// Type-erased coloring: any deterministic function of a sorted edge.
class ColoringSource {
public:
    using ColorFn = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

    ColoringSource(int uniformity, std::uint64_t n_vertices, ColorFn color_of);

    int uniformity() const noexcept { return k_; }
    std::uint64_t vertex_count() const noexcept { return n_; }
    std::uint64_t color_of(std::span<const std::uint64_t> edge) const { return fn_(edge); }

private:
    int k_;
    std::uint64_t n_;
    ColorFn fn_;
};

/// Dense symmetric table of interned pair colors on n vertices. Ids are
/// assigned in first-seen colex edge order starting at 0.
class ColorTable {
public:
    ColorTable() = default;

    /// key(i, j) for 0-based i < j returns any 64-bit color key.
    static ColorTable build(std::uint64_t n, const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& key);

    /// Sigma colors of params, optionally passed through a projection first.
    static ColorTable from_sigma(const SigmaParams& params,
        const std::function<SigmaColor(const SigmaColor&)>& projection = {});

    std::uint64_t size() const noexcept { return n_; }
    std::uint32_t at(std::uint64_t i, std::uint64_t j) const noexcept { return ids_[i * n_ + j]; }
    std::uint32_t palette_size() const noexcept { return palette_; }

private:
    std::uint64_t n_ = 0;
    std::uint32_t palette_ = 0;
    std::vector<std::uint32_t> ids_;
};

/// Largest n for which SigmaSource tabulates colors instead of recomputing.
inline constexpr std::uint64_t sigma_table_limit = 4096;

class SigmaSource {
public:
    explicit SigmaSource(const SigmaParams& params);

    int uniformity() const noexcept { return 2; }
    std::uint64_t vertex_count() const noexcept { return params_.n_requested; }
    std::uint64_t color_of(std::span<const std::uint64_t> edge) const;

    const SigmaParams& params() const noexcept { return params_; }

private:
    SigmaParams params_;
    ColorTable table_;
    std::vector<VertexVec> vertices_;
};

/// The lifted coloring on N vertices {0, ..., N-1} of {0,1}^n, n = lift_size(N).
/// Color id = 2 * (interned sigma id of the sorted gamma pair) + (delta == +1).
class ChiSource {
public:
    explicit ChiSource(std::uint64_t n_vertices);

    int uniformity() const noexcept { return 3; }
    std::uint64_t vertex_count() const noexcept { return n_vertices_; }
    std::uint64_t color_of(std::span<const std::uint64_t> edge) const noexcept
    {
        const int a = gamma_raw(edge[0], edge[1], bits_);
        const int b = gamma_raw(edge[1], edge[2], bits_);
        const std::uint64_t base = a < b ? gamma_ids_.at(a - 1, b - 1) : gamma_ids_.at(b - 1, a - 1);
        return 2 * base + (a < b ? 1 : 0);
    }

    int bits() const noexcept { return bits_; }
    const SigmaParams& params() const noexcept { return params_; }
    /// Sigma colors realized on the gamma pairs {a < b} of [n].
    std::uint32_t sigma_palette() const noexcept { return gamma_ids_.palette_size(); }

private:
    std::uint64_t n_vertices_;
    int bits_;
    SigmaParams params_;
    ColorTable gamma_ids_;
};

/// Explicit per-edge ids, indexed by colex rank of the sorted edge.
class TableSource {
public:
    TableSource(int uniformity, std::uint64_t n_vertices, std::vector<std::uint32_t> ids);

    int uniformity() const noexcept { return k_; }
    std::uint64_t vertex_count() const noexcept { return n_; }
    std::uint64_t color_of(std::span<const std::uint64_t> edge) const;

private:
    int k_;
    std::uint64_t n_;
    std::vector<std::uint32_t> ids_;
};

} // namespace stepup
