#include "oracles.hpp"

#include <stepup/combinat.hpp>
#include <stepup/errors.hpp>

#include <doctest.h>

#include <set>

using namespace stepup;

TEST_CASE("compare follows binary integer order")
{
    CHECK(compare(VertexVec::parse("0011"), VertexVec::parse("0101")) == std::strong_ordering::less);
    CHECK(compare(VertexVec::parse("1100"), VertexVec::parse("1100")) == std::strong_ordering::equal);
    CHECK(compare(VertexVec::parse("1001"), VertexVec::parse("0110")) == std::strong_ordering::greater);
    CHECK_THROWS_AS(compare(VertexVec::parse("0011"), VertexVec::parse("00011")), DimensionError);
    CHECK_THROWS_AS(compare(VertexVec::parse("0011"), VertexVec::parse("0111")), DimensionError);
}

TEST_CASE("VertexVec validates its invariants")
{
    CHECK_THROWS_AS(VertexVec(0b0111, 4, 2), DimensionError);
    CHECK_THROWS_AS(VertexVec(0b1111, 4, 4), DimensionError);
    CHECK_THROWS_AS(VertexVec(0b10000, 4, 1), DimensionError);
    CHECK_THROWS_AS(VertexVec::parse("01a1"), DimensionError);
    const VertexVec v = VertexVec::parse("0101");
    CHECK(v.at(1) == 0);
    CHECK(v.at(2) == 1);
    CHECK(v.str() == "0101");
    CHECK_THROWS_AS(v.at(5), RangeError);
}

TEST_CASE("unrank examples")
{
    CHECK(unrank(0, 4, 2).str() == "0011");
    CHECK(unrank(5, 4, 2).str() == "1100");
    CHECK(unrank(2, 4, 2).str() == "0110");
    CHECK_THROWS_AS(unrank(6, 4, 2), RangeError);
    CHECK(rank(VertexVec::parse("0011")) == 0);
    CHECK(rank(VertexVec::parse("1100")) == 5);
}

TEST_CASE("unrank matches sorted enumeration of weight-t vectors")
{
    for (int m = 2; m <= 12; ++m)
        for (int t = 1; t < m; ++t) {
            const auto expected = oracle::weight_vectors(m, t);
            REQUIRE(expected.size() == choose(m, t));
            std::set<std::uint64_t> seen;
            for (std::uint64_t r = 0; r < expected.size(); ++r) {
                const VertexVec v = unrank(r, m, t);
                CHECK(v.bits() == oracle::to_int(expected[r]));
                seen.insert(v.bits());
            }
            CHECK(seen.size() == expected.size());
        }
}

TEST_CASE("rank and unrank are inverse and order preserving up to m = 16")
{
    for (int m = 2; m <= 16; ++m)
        for (int t = 1; t < m; ++t) {
            const std::uint64_t total = choose(m, t);
            for (std::uint64_t r = 0; r < total; ++r) {
                const VertexVec v = unrank(r, m, t);
                REQUIRE(rank(v) == r);
                REQUIRE(unrank(rank(v), m, t) == v);
                if (r > 0)
                    REQUIRE(compare(unrank(r - 1, m, t), v) == std::strong_ordering::less);
            }
        }
}

TEST_CASE("choose is exact and refuses to overflow")
{
    CHECK(choose(4, 2) == 6);
    CHECK(choose(5, 0) == 1);
    CHECK(choose(40, 20) == 137846528820ULL);
    CHECK(choose(3, 5) == 0);
    for (int m = 0; m <= 67; ++m)
        for (int t = 0; t <= m; ++t) {
            const auto ref = oracle::pascal(m, t);
            if (ref <= UINT64_MAX)
                REQUIRE(choose(m, t) == static_cast<std::uint64_t>(ref));
            else
                REQUIRE_THROWS_AS(choose(m, t), OverflowError);
        }
    for (int m = 0; m <= 128; ++m)
        for (int t = 0; t <= m; ++t)
            REQUIRE(choose_wide(m, t) == oracle::pascal(m, t));
    CHECK_THROWS_AS(choose_wide(200, 100), OverflowError);
    CHECK(choose(64, 32) == 1832624140942590534ULL);
    CHECK_THROWS_AS(choose(-1, 0), RangeError);
}

TEST_CASE("colex rank, unrank and successor agree")
{
    for (std::uint64_t n = 1; n <= 9; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            std::vector<std::uint64_t> s(k);
            for (std::size_t i = 0; i < k; ++i)
                s[i] = i;
            const std::uint64_t total = choose(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
            for (std::uint64_t r = 0; r < total; ++r) {
                REQUIRE(colex_rank(s) == r);
                std::vector<std::uint64_t> u(k);
                colex_unrank(r, u);
                REQUIRE(u == s);
                const bool more = next_colex(s, n);
                REQUIRE(more == (r + 1 < total));
            }
        }
    // Large vertex labels go through the wide path.
    const std::vector<std::uint64_t> big{3, 1000, 65535, 4'000'000ULL, 1ULL << 24};
    std::vector<std::uint64_t> back(5);
    colex_unrank(colex_rank(big), back);
    CHECK(back == big);
    CHECK_THROWS_AS(colex_rank(std::vector<std::uint64_t>{2, 2}), OrderError);
}

TEST_CASE("ceil_log2")
{
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(16) == 4);
    CHECK(ceil_log2(17) == 5);
    CHECK(ceil_log2(UINT64_MAX) == 64);
}
