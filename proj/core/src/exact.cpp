#include "stepup/exact.hpp"

#include "stepup/combinat.hpp"
#include "stepup/errors.hpp"

#include <chrono>

namespace stepup {

namespace {

struct Instance {
    int n = 0, k = 0, p = 0, q = 0;
    int edge_count = 0;
    std::vector<std::vector<int>> subsets_of_edge;
    int subset_count = 0;
    int edges_per_subset = 0;
};

void check_range(int n, int k, int p, int q)
{
    if (k != 2 && k != 3)
        throw CapacityError("exact search supports k in {2, 3}");
    if (p < k || p > n || n > 8)
        throw CapacityError("exact search needs k <= p <= n <= 8");
    if (q < 1 || static_cast<std::uint64_t>(q) > choose(p, k))
        throw CapacityError("exact search needs 1 <= q <= C(p, k)");
}

Instance build_instance(int n, int k, int p, int q)
{
    Instance inst;
    inst.n = n;
    inst.k = k;
    inst.p = p;
    inst.q = q;
    const auto N = static_cast<std::uint64_t>(n);
    inst.edge_count = static_cast<int>(choose(n, k));
    inst.subset_count = static_cast<int>(choose(n, p));
    inst.edges_per_subset = static_cast<int>(choose(p, k));
    inst.subsets_of_edge.resize(static_cast<std::size_t>(inst.edge_count));

    std::vector<std::uint64_t> subset(static_cast<std::size_t>(p));
    colex_unrank(0, subset);
    for (int s = 0; s < inst.subset_count; ++s) {
        std::uint32_t mask = 0;
        for (auto v : subset)
            mask |= 1u << v;
        std::vector<std::uint64_t> edge(static_cast<std::size_t>(k));
        colex_unrank(0, edge);
        for (int e = 0; e < inst.edge_count; ++e) {
            std::uint32_t em = 0;
            for (auto v : edge)
                em |= 1u << v;
            if ((em & mask) == em)
                inst.subsets_of_edge[static_cast<std::size_t>(e)].push_back(s);
            next_colex(edge, N);
        }
        next_colex(subset, N);
    }
    return inst;
}

enum class Outcome { found, exhausted, budget };

class Search {
public:
    Search(const Instance& inst, int colors, bool prune, bool stop_at_first)
        : inst_(inst), colors_(colors), prune_(prune), stop_(stop_at_first),
          counts_(static_cast<std::size_t>(inst.subset_count) * static_cast<std::size_t>(colors), 0),
          distinct_(static_cast<std::size_t>(inst.subset_count), 0),
          remaining_(static_cast<std::size_t>(inst.subset_count), inst.edges_per_subset),
          assignment_(static_cast<std::size_t>(inst.edge_count), 0)
    {
    }

    void set_budget(const SearchBudget& b, std::chrono::steady_clock::time_point start, std::uint64_t nodes_before)
    {
        budget_ = b;
        start_ = start;
        nodes_before_ = nodes_before;
    }

    Outcome run()
    {
        const bool ok = dfs(0, 0);
        if (out_of_budget_)
            return Outcome::budget;
        return ok ? Outcome::found : Outcome::exhausted;
    }

    std::uint64_t nodes = 0;
    std::uint64_t leaves = 0;
    std::uint64_t valid = 0;
    const std::vector<std::uint32_t>& assignment() const { return assignment_; }

private:
    bool over_budget()
    {
        if (nodes_before_ + nodes >= budget_.max_nodes)
            return true;
        if ((nodes & 0xFFF) == 0 && budget_.max_seconds != std::numeric_limits<double>::infinity()) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
            if (elapsed.count() >= budget_.max_seconds)
                return true;
        }
        return false;
    }

    void apply(int e, int c, int sign)
    {
        for (int s : inst_.subsets_of_edge[static_cast<std::size_t>(e)]) {
            auto& cnt = counts_[static_cast<std::size_t>(s) * static_cast<std::size_t>(colors_) + static_cast<std::size_t>(c)];
            if (sign > 0) {
                if (cnt++ == 0)
                    ++distinct_[static_cast<std::size_t>(s)];
                --remaining_[static_cast<std::size_t>(s)];
            } else {
                if (--cnt == 0)
                    --distinct_[static_cast<std::size_t>(s)];
                ++remaining_[static_cast<std::size_t>(s)];
            }
        }
    }

    bool feasible_after(int e) const
    {
        for (int s : inst_.subsets_of_edge[static_cast<std::size_t>(e)])
            if (distinct_[static_cast<std::size_t>(s)] + remaining_[static_cast<std::size_t>(s)] < inst_.q)
                return false;
        return true;
    }

    bool all_subsets_ok() const
    {
        for (int d : distinct_)
            if (d < inst_.q)
                return false;
        return true;
    }

    bool dfs(int e, int used)
    {
        if (e == inst_.edge_count) {
            ++leaves;
            if (prune_ || all_subsets_ok()) {
                ++valid;
                return stop_;
            }
            return false;
        }
        const int top = used < colors_ ? used : colors_ - 1;
        for (int c = 0; c <= top; ++c) {
            ++nodes;
            if (stop_ && over_budget()) {
                out_of_budget_ = true;
                return false;
            }
            assignment_[static_cast<std::size_t>(e)] = static_cast<std::uint32_t>(c);
            apply(e, c, +1);
            if (!prune_ || feasible_after(e)) {
                if (dfs(e + 1, c == used ? used + 1 : used))
                    return true;
                if (out_of_budget_) {
                    apply(e, c, -1);
                    return false;
                }
            }
            apply(e, c, -1);
        }
        return false;
    }

    const Instance& inst_;
    int colors_;
    bool prune_;
    bool stop_;
    std::vector<int> counts_;
    std::vector<int> distinct_;
    std::vector<int> remaining_;
    std::vector<std::uint32_t> assignment_;
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t nodes_before_ = 0;
    bool out_of_budget_ = false;
};

} // namespace

ExactResult exact_min_colors(int n, int k, int p, int q, const SearchBudget& budget)
{
    check_range(n, k, p, q);
    if (budget.max_nodes == 0 || !(budget.max_seconds > 0))
        throw ParameterError("search budget must be positive");
    const Instance inst = build_instance(n, k, p, q);
    const auto start = std::chrono::steady_clock::now();
    ExactResult result;
    // Fewer than q colors can never give a p-subset q colors.
    for (int c = q; c <= inst.edge_count; ++c) {
        Search search(inst, c, true, true);
        search.set_budget(budget, start, result.nodes_expanded);
        const Outcome outcome = search.run();
        result.nodes_expanded += search.nodes;
        if (outcome == Outcome::found) {
            result.status = ExactStatus::exact;
            result.value = c;
            result.certificate = search.assignment();
            return result;
        }
        if (outcome == Outcome::budget) {
            result.status = ExactStatus::lower_bound;
            result.value = c;
            return result;
        }
    }
    // Unreachable: a rainbow coloring satisfies any q <= C(p, k).
    throw Error("exact search found no coloring up to a rainbow palette");
}

EnumerationCount enumerate_canonical(int n, int k, int p, int q, int colors, bool prune)
{
    check_range(n, k, p, q);
    if (colors < 1)
        throw ParameterError("colors must be positive");
    const Instance inst = build_instance(n, k, p, q);
    Search search(inst, colors, prune, false);
    search.run();
    return EnumerationCount{search.leaves, search.valid, search.nodes};
}

} // namespace stepup
