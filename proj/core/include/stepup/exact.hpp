#pragma once

// Exact f_k(n, p, q) for tiny n by canonical backtracking with iterative
// deepening on the number of colors.

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace stepup {

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();
};

enum class ExactStatus { exact, lower_bound };

struct ExactResult {
    ExactStatus status = ExactStatus::lower_bound;
    /// Exact minimum, or a proven lower bound: no coloring with fewer colors exists.
    int value = 0;
    /// Color per edge, edges in colex order; present iff status == exact.
    std::optional<std::vector<std::uint32_t>> certificate;
    std::uint64_t nodes_expanded = 0;
};

/// k in {2, 3}, k <= p <= n <= 8, 1 <= q <= C(p, k); CapacityError otherwise.
ExactResult exact_min_colors(int n, int k, int p, int q, const SearchBudget& budget = {});

struct EnumerationCount {
    std::uint64_t leaves = 0;     // complete canonical colorings reached
    std::uint64_t valid = 0;      // those that are (p, q)-colorings
    std::uint64_t nodes = 0;
};

/// Walks the whole canonical search tree for at most `colors` labels without
/// stopping at the first solution. With prune == false every canonical
/// coloring (one per partition of the edges into <= colors classes) is a leaf.
EnumerationCount enumerate_canonical(int n, int k, int p, int q, int colors, bool prune);

} // namespace stepup
