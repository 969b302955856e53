#include "oracles.hpp"

#include <stepup/errors.hpp>
#include <stepup/verify.hpp>

#include <doctest.h>

#include <random>

using namespace stepup;

namespace {

// A seeded random coloring with explicit ids in colex order.
TableSource random_table(int k, std::uint64_t n, std::uint32_t colors, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> ids(choose(static_cast<std::int64_t>(n), k));
    for (auto& id : ids)
        id = static_cast<std::uint32_t>(rng() % colors);
    return TableSource(k, n, std::move(ids));
}

void check_against_naive(const TableSource& src, int p, int q)
{
    const auto report = verify_pq(src, p, q, Exhaustive{}, 1);
    const auto naive = oracle::naive_verify(src.vertex_count(), src.uniformity(), p, q,
        [&](const std::vector<std::uint64_t>& e) { return src.color_of(e); });
    REQUIRE(report.passed() == naive.pass);
    REQUIRE(report.checked == naive.checked);
    REQUIRE(report.min_colors_seen.value() == naive.min_distinct);
    REQUIRE(report.witnesses.size() == std::min<std::uint64_t>(naive.failures, witness_cap));
}

} // namespace

TEST_CASE("chi on N = 16 is a (5,3)-coloring")
{
    const auto r = verify_pq(ChiSource(16), 5, 3, Exhaustive{}, 1);
    CHECK(r.passed());
    CHECK(r.checked == 4368);
    CHECK(r.min_colors_seen.value() >= 3);
    CHECK(r.witnesses.empty());
}

TEST_CASE("a constant coloring fails with the first 5-subset as witness")
{
    const ColoringSource constant(3, 6, [](std::span<const std::uint64_t>) { return std::uint64_t{0}; });
    const auto r = verify_pq(constant, 5, 3, Exhaustive{}, 1);
    CHECK(!r.passed());
    CHECK(r.min_colors_seen.value() == 1);
    REQUIRE(r.witnesses.size() == 6);
    CHECK(r.witnesses.front().vertices == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
    CHECK(r.witnesses.front().colors == std::vector<std::uint64_t>(10, 0));
}

TEST_CASE("sigma on n = 50 is a (4,3)-coloring")
{
    const auto r = verify_pq(SigmaSource(select_params(50)), 4, 3, Exhaustive{}, 1);
    CHECK(r.passed());
    CHECK(r.checked == choose(50, 4));
}

TEST_CASE("parameter errors")
{
    const ChiSource src(16);
    CHECK_THROWS_AS(verify_pq(src, 2, 1, Exhaustive{}), ParameterError);
    CHECK_THROWS_AS(verify_pq(src, 4, 5, Exhaustive{}), ParameterError);
    CHECK_THROWS_AS(verify_pq(src, 5, 0, Exhaustive{}), ParameterError);
    CHECK_THROWS_AS(verify_pq(src, 17, 3, Exhaustive{}), ParameterError);
    CHECK_NOTHROW(verify_pq(src, 4, 4, Exhaustive{}));
}

TEST_CASE("witness list is capped")
{
    const ColoringSource constant(2, 30, [](std::span<const std::uint64_t>) { return std::uint64_t{7}; });
    const auto r = verify_pq(constant, 3, 2, Exhaustive{}, 3);
    CHECK(!r.passed());
    CHECK(r.checked == choose(30, 3));
    CHECK(r.witnesses.size() == witness_cap);
}

TEST_CASE("exhaustive verification agrees with the naive reference on random colorings")
{
    std::mt19937_64 pick(123);
    for (int trial = 0; trial < 40; ++trial) {
        const int k = 2 + static_cast<int>(pick() % 2);
        const std::uint64_t n = 6 + pick() % 5;
        const int p = k + 1 + static_cast<int>(pick() % 3);
        const int q = 1 + static_cast<int>(pick() % std::min<std::uint64_t>(choose(p, k), 5));
        const auto colors = static_cast<std::uint32_t>(1 + pick() % 6);
        check_against_naive(random_table(k, n, colors, pick()), p, q);
    }
}

TEST_CASE("monotonicity: pass at (p,q) implies pass at (p,q-1)")
{
    std::mt19937_64 pick(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto src = random_table(3, 8, 4, pick());
        for (int q = 2; q <= 6; ++q) {
            const auto hi = verify_pq(src, 5, q, Exhaustive{}, 1);
            const auto lo = verify_pq(src, 5, q - 1, Exhaustive{}, 1);
            if (hi.passed())
                CHECK(lo.passed());
        }
    }
}

TEST_CASE("partitioned ranges merge into the single-range report")
{
    const auto src = random_table(3, 11, 3, 77);
    const std::uint64_t total = choose(11, 5);
    const auto whole = verify_range(src, 5, 4, 0, total);
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::uint64_t> cuts{0, total};
        const int pieces = 1 + static_cast<int>(rng() % 9);
        for (int i = 0; i < pieces; ++i)
            cuts.push_back(rng() % (total + 1));
        std::sort(cuts.begin(), cuts.end());
        VerifyReport merged = verify_range(src, 5, 4, cuts[0], cuts[1]);
        for (std::size_t i = 1; i + 1 < cuts.size(); ++i)
            merge_into(merged, verify_range(src, 5, 4, cuts[i], cuts[i + 1]));
        CHECK(merged == whole);
    }
    for (unsigned w : {1u, 2u, 3u, 7u, 64u})
        CHECK(verify_pq(src, 5, 4, Exhaustive{}, w) == whole);
}

TEST_CASE("sampled mode is reproducible and worker independent")
{
    const ChiSource src(256);
    const VerifyMode mode = Sampled{20'000, 31};
    const auto a = verify_pq(src, 5, 3, mode, 1);
    const auto b = verify_pq(src, 5, 3, mode, 4);
    CHECK(a == b);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.checked == 20'000);
    CHECK(a.passed());

    const auto bad = random_table(3, 12, 2, 3);
    const auto x = verify_pq(bad, 5, 3, Sampled{500, 8}, 1);
    const auto y = verify_pq(bad, 5, 3, Sampled{500, 8}, 5);
    CHECK(x == y);
    CHECK(!x.passed());
}

TEST_CASE("report json is stable")
{
    const ColoringSource constant(3, 5, [](std::span<const std::uint64_t>) { return std::uint64_t{0}; });
    const auto r = verify_pq(constant, 5, 3, Exhaustive{}, 1);
    CHECK(r.to_json()
        == R"({"verdict":"fail","k":3,"p":5,"q":3,"vertices":5,"mode":"exhaustive","checked":1,"min_colors_seen":1,)"
           R"("witnesses":[{"vertices":[1,2,3,4,5],"colors":[0,0,0,0,0,0,0,0,0,0]}]})");
    const auto s = verify_pq(ChiSource(16), 5, 3, Sampled{10, 2}, 1);
    CHECK(s.to_json().find(R"("mode":"sampled","sample_size":10,"seed":2,"checked":10)") != std::string::npos);
}

TEST_CASE("proposition checkers pass on sigma")
{
    for (const auto& [m, t] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}, {7, 3}}) {
        const SigmaParams p = params_for_binomial(m, t);
        CHECK(!check_prop1(p).has_value());
        CHECK(!check_prop2(p).has_value());
        CHECK(!check_prop3(p).has_value());
    }
}

TEST_CASE("proposition checkers find counterexamples on mutated sigma")
{
    const SigmaParams p = params_for_binomial(5, 2);

    // c2 alone also separates vw from wx (w(c2) is 0 on one side and 1 on
    // the other), so property 1 only breaks once c1 and c2 are both gone.
    const auto no_c1 = ColorTable::from_sigma(p, [](const SigmaColor& c) { return SigmaColor{1, c.c2, c.c3, c.c4}; });
    CHECK(!check_prop1(no_c1).has_value());
    const auto no_c1c2 = ColorTable::from_sigma(p, [](const SigmaColor& c) { return SigmaColor{1, 1, c.c3, c.c4}; });
    const auto cex1 = check_prop1(no_c1c2);
    REQUIRE(cex1.has_value());
    const auto& w1 = *cex1;
    CHECK(w1[0] < w1[1]);
    CHECK(w1[1] < w1[2]);
    CHECK(no_c1c2.at(w1[0], w1[1]) == no_c1c2.at(w1[1], w1[2]));

    // Keeping (c2, c3) still satisfies property 2 here; dropping both
    // position coordinates does not.
    const auto c2c3 = ColorTable::from_sigma(p, [](const SigmaColor& c) { return SigmaColor{0, c.c2, c.c3, 0}; });
    CHECK(!check_prop2(c2c3).has_value());
    const auto c3c4 = ColorTable::from_sigma(p, [](const SigmaColor& c) { return SigmaColor{0, 0, c.c3, c.c4}; });
    const auto cex2 = check_prop2(c3c4);
    REQUIRE(cex2.has_value());
    const auto& w2 = *cex2;
    CHECK(w2[0] < w2[1]);
    CHECK(w2[1] < std::min(w2[2], w2[3]));
    CHECK(w2[2] != w2[3]);
    CHECK(c3c4.at(w2[0], w2[1]) == c3c4.at(w2[0], w2[2]));
    CHECK(c3c4.at(w2[0], w2[3]) == c3c4.at(w2[1], w2[2]));

    // f_B replaced by a constant map.
    const auto flat = ColorTable::from_sigma(p, [](const SigmaColor& c) { return SigmaColor{c.c1, c.c2, 1, 1}; });
    const auto cex3 = check_prop3(flat);
    REQUIRE(cex3.has_value());
    const auto& w3 = *cex3;
    CHECK(flat.at(w3[0], w3[1]) == flat.at(w3[2], w3[3]));
    CHECK(flat.at(w3[0], w3[2]) == flat.at(w3[0], w3[3]));
}

TEST_CASE("stepping facts")
{
    const auto r4 = check_stepping_facts(4, Exhaustive{});
    CHECK(r4.passed());
    CHECK(r4.tuples_checked == 4368);
    CHECK(r4.triples_checked == 560);
    CHECK(check_stepping_facts(5, Exhaustive{}).passed());
    const auto s = check_stepping_facts(20, Sampled{100'000, 7});
    CHECK(s.passed());
    CHECK(s.tuples_checked == 100'000);
    CHECK(s.triples_checked == 1'000'000);
    CHECK(check_stepping_facts(2, Exhaustive{}).tuples_checked == 0);
}
