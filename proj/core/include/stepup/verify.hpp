#pragma once

// (p,q)-coloring verification of complete k-graphs: every p-subset of the
// vertices must see at least q distinct colors on its C(p,k) edges.
//
// p-subsets are addressed by colex rank, so any run can be split into
// contiguous [lo, hi) ranges whose reports merge into the single-range
// result. Sampled runs draw ranks from SubsetSampler.

#include "stepup/combinat.hpp"
#include "stepup/sampling.hpp"
#include "stepup/sources.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace stepup {

inline constexpr std::size_t witness_cap = 100;

struct Exhaustive {
    bool operator==(const Exhaustive&) const = default;
};
struct Sampled {
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
    bool operator==(const Sampled&) const = default;
};
using VerifyMode = std::variant<Exhaustive, Sampled>;

enum class Verdict { pass, fail };

struct Witness {
    std::vector<std::uint64_t> vertices; // 0-based, ascending
    std::vector<std::uint64_t> colors;   // one per internal edge, colex edge order
    bool operator==(const Witness&) const = default;
};

struct VerifyReport {
    Verdict verdict = Verdict::pass;
    int k = 0;
    int p = 0;
    int q = 0;
    std::uint64_t n_vertices = 0;
    std::uint64_t checked = 0;
    /// Minimum distinct-color count over checked subsets; none when checked == 0.
    std::optional<std::uint32_t> min_colors_seen;
    std::vector<Witness> witnesses;
    VerifyMode mode = Exhaustive{};

    bool passed() const noexcept { return verdict == Verdict::pass; }
    bool operator==(const VerifyReport&) const = default;

    /// Stable JSON document; vertex labels are printed 1-based.
    std::string to_json() const;
};

/// Appends `later` (covering ranks after `earlier`) onto `earlier`.
void merge_into(VerifyReport& earlier, const VerifyReport& later);

/// Checks p and q against k and n; ParameterError on violation.
void validate_pq(int k, std::uint64_t n, int p, int q);

namespace detail {

/// k-subsets of {0..p-1} in colex order.
std::vector<std::vector<int>> internal_edges(int p, int k);

unsigned resolve_workers(unsigned requested) noexcept;

template <EdgeColoring C>
class SubsetChecker {
public:
    SubsetChecker(const C& src, int p, int q)
        : src_(src), p_(p), q_(q), k_(src.uniformity()), patterns_(internal_edges(p, src.uniformity())),
          colors_(patterns_.size()), edge_(static_cast<std::size_t>(k_))
    {
        report_.k = k_;
        report_.p = p;
        report_.q = q;
        report_.n_vertices = src.vertex_count();
    }

    void check(std::span<const std::uint64_t> subset)
    {
        std::uint32_t distinct = 0;
        for (std::size_t e = 0; e < patterns_.size(); ++e) {
            for (int i = 0; i < k_; ++i)
                edge_[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(patterns_[e][static_cast<std::size_t>(i)])];
            const std::uint64_t c = src_.color_of(std::span<const std::uint64_t>(edge_));
            colors_[e] = c;
            if (std::find(colors_.begin(), colors_.begin() + static_cast<std::ptrdiff_t>(e), c) == colors_.begin() + static_cast<std::ptrdiff_t>(e))
                ++distinct;
        }
        ++report_.checked;
        if (!report_.min_colors_seen || distinct < *report_.min_colors_seen)
            report_.min_colors_seen = distinct;
        if (distinct < static_cast<std::uint32_t>(q_)) {
            report_.verdict = Verdict::fail;
            if (report_.witnesses.size() < witness_cap)
                report_.witnesses.push_back(Witness{{subset.begin(), subset.end()}, colors_});
        }
    }

    VerifyReport take() { return std::move(report_); }

private:
    const C& src_;
    int p_;
    int q_;
    int k_;
    std::vector<std::vector<int>> patterns_;
    std::vector<std::uint64_t> colors_;
    std::vector<std::uint64_t> edge_;
    VerifyReport report_;
};

} // namespace detail

/// Exhaustive check of the p-subsets with colex rank in [lo, hi).
template <EdgeColoring C>
VerifyReport verify_range(const C& src, int p, int q, std::uint64_t lo, std::uint64_t hi)
{
    validate_pq(src.uniformity(), src.vertex_count(), p, q);
    detail::SubsetChecker<C> checker(src, p, q);
    if (lo < hi) {
        std::vector<std::uint64_t> subset(static_cast<std::size_t>(p));
        colex_unrank(lo, subset);
        for (std::uint64_t r = lo; r < hi; ++r) {
            checker.check(subset);
            if (r + 1 < hi)
                next_colex(subset, src.vertex_count());
        }
    }
    return checker.take();
}

/// Number of p-subsets; CapacityError beyond 64 bits.
std::uint64_t subset_count(std::uint64_t n, int p);

/// Full (p,q) check. workers == 0 uses the available hardware concurrency.
/// The report does not depend on the worker count.
template <EdgeColoring C>
VerifyReport verify_pq(const C& src, int p, int q, const VerifyMode& mode, unsigned workers = 0)
{
    validate_pq(src.uniformity(), src.vertex_count(), p, q);
    const unsigned w = detail::resolve_workers(workers);

    auto run_parallel = [&](std::uint64_t count, auto&& range_fn) {
        std::vector<VerifyReport> parts(w);
        std::vector<std::thread> threads;
        for (unsigned i = 0; i < w; ++i) {
            const std::uint64_t a = static_cast<std::uint64_t>(static_cast<u128>(count) * i / w);
            const std::uint64_t b = static_cast<std::uint64_t>(static_cast<u128>(count) * (i + 1) / w);
            if (w == 1)
                parts[i] = range_fn(a, b);
            else
                threads.emplace_back([&, i, a, b] { parts[i] = range_fn(a, b); });
        }
        for (auto& t : threads)
            t.join();
        VerifyReport merged = std::move(parts[0]);
        for (unsigned i = 1; i < w; ++i)
            merge_into(merged, parts[i]);
        return merged;
    };

    if (std::holds_alternative<Exhaustive>(mode)) {
        const std::uint64_t total = subset_count(src.vertex_count(), p);
        VerifyReport r = run_parallel(total, [&](std::uint64_t a, std::uint64_t b) {
            return verify_range(src, p, q, a, b);
        });
        r.mode = mode;
        return r;
    }

    const Sampled s = std::get<Sampled>(mode);
    SubsetSampler sampler(src.vertex_count(), p, s.sample_size, s.seed);
    VerifyReport total;
    {
        detail::SubsetChecker<C> empty(src, p, q);
        total = empty.take();
    }
    std::vector<u128> batch;
    while (sampler.next_batch(batch, std::size_t{1} << 18)) {
        VerifyReport part = run_parallel(batch.size(), [&](std::uint64_t a, std::uint64_t b) {
            detail::SubsetChecker<C> checker(src, p, q);
            std::vector<std::uint64_t> subset(static_cast<std::size_t>(p));
            for (std::uint64_t i = a; i < b; ++i) {
                colex_unrank(batch[i], subset);
                checker.check(subset);
            }
            return checker.take();
        });
        merge_into(total, part);
    }
    total.mode = mode;
    return total;
}

// Properties of a pair coloring on a vertex order 0 < 1 < ... < n-1.
// Each returns the first counterexample (0-based vertices, in the order
// named by the property) or nullopt when the property holds throughout.

/// v < w < x with color(vw) == color(wx). Returns {v, w, x}.
std::optional<std::vector<std::uint64_t>> check_prop1(const ColorTable& colors);
/// v < w < min(x, y), x != y, color(vw) == color(vx) and color(vy) == color(wx).
/// Returns {v, w, x, y}.
std::optional<std::vector<std::uint64_t>> check_prop2(const ColorTable& colors);
/// v < w < x < y, color(vw) == color(xy) and color(vx) == color(vy). Returns {v, w, x, y}.
std::optional<std::vector<std::uint64_t>> check_prop3(const ColorTable& colors);

std::optional<std::vector<std::uint64_t>> check_prop1(const SigmaParams& params);
std::optional<std::vector<std::uint64_t>> check_prop2(const SigmaParams& params);
std::optional<std::vector<std::uint64_t>> check_prop3(const SigmaParams& params);

struct SteppingReport {
    std::uint64_t tuples_checked = 0;
    std::uint64_t triples_checked = 0;
    /// Failing tuple (values in {0,1}^n) and which fact it breaks.
    std::optional<std::vector<std::uint64_t>> counterexample;
    std::string failure;

    bool passed() const noexcept { return !counterexample.has_value(); }
};

/// Over sorted 5-tuples of {0,1}^n: consecutive gammas differ and the
/// minimum of the four consecutive gammas is attained once. Also checks
/// gamma(u,v) != gamma(v,w) on every sorted triple (all triples of the
/// vertex set in exhaustive mode, all triples inside each sampled tuple
/// otherwise). Requires 1 <= n <= 64.
SteppingReport check_stepping_facts(int n, const VerifyMode& mode);

} // namespace stepup
