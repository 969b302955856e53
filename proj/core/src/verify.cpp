#include "stepup/verify.hpp"

#include "stepup/errors.hpp"

#include <json.hpp>

#include <array>

namespace stepup {

namespace {

void collect(std::vector<int>& cur, int start, int p, int k, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < p; ++i) {
        cur.push_back(i);
        collect(cur, i + 1, p, k, out);
        cur.pop_back();
    }
}

} // namespace

namespace detail {

std::vector<std::vector<int>> internal_edges(int p, int k)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    collect(cur, 0, p, k, out);
    // Lexicographic generation; reorder to colex (compare from the largest element).
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return out;
}

unsigned resolve_workers(unsigned requested) noexcept
{
    if (requested != 0)
        return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace detail

void validate_pq(int k, std::uint64_t n, int p, int q)
{
    if (k < 1)
        throw ParameterError("uniformity must be positive");
    if (p < k)
        throw ParameterError("p must be at least the uniformity k");
    if (static_cast<std::uint64_t>(p) > n)
        throw ParameterError("p exceeds the number of vertices");
    if (p > 16)
        throw ParameterError("p above 16 is not supported");
    if (q < 1)
        throw ParameterError("q must be positive");
    if (static_cast<std::uint64_t>(q) > choose(p, k))
        throw ParameterError("q exceeds C(p, k); no coloring can satisfy it");
}

std::uint64_t subset_count(std::uint64_t n, int p)
{
    const u128 total = choose_wide(static_cast<std::int64_t>(n), p);
    if (total > std::numeric_limits<std::uint64_t>::max())
        throw CapacityError("too many subsets for exhaustive enumeration");
    return static_cast<std::uint64_t>(total);
}

void merge_into(VerifyReport& earlier, const VerifyReport& later)
{
    earlier.checked += later.checked;
    if (later.min_colors_seen && (!earlier.min_colors_seen || *later.min_colors_seen < *earlier.min_colors_seen))
        earlier.min_colors_seen = later.min_colors_seen;
    if (later.verdict == Verdict::fail)
        earlier.verdict = Verdict::fail;
    for (const auto& w : later.witnesses) {
        if (earlier.witnesses.size() >= witness_cap)
            break;
        earlier.witnesses.push_back(w);
    }
}

std::string VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["verdict"] = verdict == Verdict::pass ? "pass" : "fail";
    j["k"] = k;
    j["p"] = p;
    j["q"] = q;
    j["vertices"] = n_vertices;
    if (std::holds_alternative<Exhaustive>(mode)) {
        j["mode"] = "exhaustive";
    } else {
        const auto& s = std::get<Sampled>(mode);
        j["mode"] = "sampled";
        j["sample_size"] = s.sample_size;
        j["seed"] = s.seed;
    }
    j["checked"] = checked;
    if (min_colors_seen)
        j["min_colors_seen"] = *min_colors_seen;
    else
        j["min_colors_seen"] = nullptr;
    auto ws = nlohmann::ordered_json::array();
    for (const auto& w : witnesses) {
        nlohmann::ordered_json e;
        auto vs = nlohmann::ordered_json::array();
        for (auto v : w.vertices)
            vs.push_back(v + 1);
        e["vertices"] = vs;
        e["colors"] = w.colors;
        ws.push_back(std::move(e));
    }
    j["witnesses"] = std::move(ws);
    return j.dump();
}

std::optional<std::vector<std::uint64_t>> check_prop1(const ColorTable& c)
{
    const std::uint64_t n = c.size();
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::uint64_t w = v + 1; w < n; ++w)
            for (std::uint64_t x = w + 1; x < n; ++x)
                if (c.at(v, w) == c.at(w, x))
                    return std::vector<std::uint64_t>{v, w, x};
    return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> check_prop2(const ColorTable& c)
{
    const std::uint64_t n = c.size();
    for (std::uint64_t v = 0; v < n; ++v) {
        for (std::uint64_t w = v + 1; w < n; ++w) {
            const auto vw = c.at(v, w);
            for (std::uint64_t x = w + 1; x < n; ++x) {
                if (c.at(v, x) != vw)
                    continue;
                const auto wx = c.at(w, x);
                for (std::uint64_t y = w + 1; y < n; ++y)
                    if (y != x && c.at(v, y) == wx)
                        return std::vector<std::uint64_t>{v, w, x, y};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> check_prop3(const ColorTable& c)
{
    const std::uint64_t n = c.size();
    for (std::uint64_t v = 0; v < n; ++v)
        for (std::uint64_t w = v + 1; w < n; ++w) {
            const auto vw = c.at(v, w);
            for (std::uint64_t x = w + 1; x < n; ++x) {
                const auto vx = c.at(v, x);
                for (std::uint64_t y = x + 1; y < n; ++y)
                    if (c.at(x, y) == vw && c.at(v, y) == vx)
                        return std::vector<std::uint64_t>{v, w, x, y};
            }
        }
    return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> check_prop1(const SigmaParams& params)
{
    return check_prop1(ColorTable::from_sigma(params));
}

std::optional<std::vector<std::uint64_t>> check_prop2(const SigmaParams& params)
{
    return check_prop2(ColorTable::from_sigma(params));
}

std::optional<std::vector<std::uint64_t>> check_prop3(const SigmaParams& params)
{
    return check_prop3(ColorTable::from_sigma(params));
}

namespace {

// Returns a failure description for a sorted 5-tuple, or nullptr.
const char* stepping_failure(std::span<const std::uint64_t, 5> x, int n)
{
    std::array<int, 4> g{};
    for (std::size_t i = 0; i < 4; ++i)
        g[i] = gamma_raw(x[i], x[i + 1], n);
    for (std::size_t i = 0; i + 1 < 4; ++i)
        if (g[i] == g[i + 1])
            return "consecutive gammas coincide";
    const int lo = *std::min_element(g.begin(), g.end());
    if (std::count(g.begin(), g.end(), lo) != 1)
        return "minimum gamma attained more than once";
    return nullptr;
}

bool triple_ok(std::uint64_t u, std::uint64_t v, std::uint64_t w, int n)
{
    return gamma_raw(u, v, n) != gamma_raw(v, w, n);
}

} // namespace

SteppingReport check_stepping_facts(int n, const VerifyMode& mode)
{
    if (n < 1 || n > 64)
        throw RangeError("stepping facts: bit length must be in [1, 64]");
    SteppingReport report;
    const std::uint64_t N = n == 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << n);
    std::array<std::uint64_t, 5> tuple{};

    auto check_tuple = [&]() {
        ++report.tuples_checked;
        if (const char* why = stepping_failure(tuple, n)) {
            report.counterexample = std::vector<std::uint64_t>(tuple.begin(), tuple.end());
            report.failure = why;
            return false;
        }
        return true;
    };

    if (std::holds_alternative<Exhaustive>(mode)) {
        if (N >= 3) {
            std::array<std::uint64_t, 3> t{0, 1, 2};
            do {
                ++report.triples_checked;
                if (!triple_ok(t[0], t[1], t[2], n)) {
                    report.counterexample = std::vector<std::uint64_t>(t.begin(), t.end());
                    report.failure = "gamma(u,v) == gamma(v,w)";
                    return report;
                }
            } while (next_colex(t, N));
        }
        if (N >= 5) {
            const std::uint64_t total = subset_count(N, 5);
            colex_unrank(0, tuple);
            for (std::uint64_t r = 0; r < total; ++r) {
                if (!check_tuple())
                    return report;
                next_colex(tuple, N);
            }
        }
        return report;
    }

    const Sampled s = std::get<Sampled>(mode);
    const auto triples = detail::internal_edges(5, 3);
    SubsetSampler sampler(N, 5, s.sample_size, s.seed);
    std::vector<u128> batch;
    while (sampler.next_batch(batch, std::size_t{1} << 16)) {
        for (const u128 r : batch) {
            colex_unrank(r, tuple);
            for (const auto& t : triples) {
                ++report.triples_checked;
                if (!triple_ok(tuple[t[0]], tuple[t[1]], tuple[t[2]], n)) {
                    report.counterexample = std::vector<std::uint64_t>{tuple[t[0]], tuple[t[1]], tuple[t[2]]};
                    report.failure = "gamma(u,v) == gamma(v,w)";
                    return report;
                }
            }
            if (!check_tuple())
                return report;
        }
    }
    return report;
}

} // namespace stepup
