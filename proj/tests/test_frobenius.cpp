#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "frob/denumerant.hpp"
#include "frob/errors.hpp"
#include "frob/frobenius.hpp"
#include "frob/numth.hpp"
#include "frob/oracle.hpp"

using namespace frob;

TEST_SUITE("frobenius") {

// ================================================================
//  closed forms
// ================================================================

TEST_CASE("g_k_closed known values") {
    CHECK(g_k_closed(3, 5, 0) == 7);
    CHECK(g_k_closed(3, 5, 1) == 22);
    CHECK(g_k_closed(3, 5, 4) == 67);
    CHECK(g_k_closed(1, 2, 0) == -1);
    CHECK_THROWS_AS(g_k_closed(4, 6, 0), InvalidInputError);
    CHECK_THROWS_AS(g_k_closed(3, 5, -1), InvalidInputError);
    CHECK_THROWS_AS(g_k_closed(1'000'000'007, 1'000'000'009, 1'000'000'000), OverflowError);
}

TEST_CASE("count_k_rep and count_nonrep known values") {
    CHECK(count_k_rep(3, 5, 1) == 14);
    CHECK(count_k_rep(3, 5, 2) == 15);
    CHECK(count_k_rep(2, 3, 1) == 5);
    CHECK(count_k_rep(3, 5, 9) == 15);
    CHECK_THROWS_AS(count_k_rep(3, 5, 0), InvalidInputError);
    CHECK_THROWS_AS(count_k_rep(4, 6, 1), InvalidInputError);

    CHECK(count_nonrep(3, 5) == 4);
    CHECK(count_nonrep(2, 3) == 1);
    CHECK(count_nonrep(1, 9) == 0);
}

TEST_CASE("k_rep_interval known values") {
    CHECK(k_rep_interval(3, 5, 2) == std::pair<std::int64_t, std::int64_t>{15, 37});
    CHECK(k_rep_interval(3, 5, 3) == std::pair<std::int64_t, std::int64_t>{30, 52});
    CHECK(k_rep_interval(2, 3, 2) == std::pair<std::int64_t, std::int64_t>{6, 13});
    CHECK_THROWS_AS(k_rep_interval(3, 5, 1), InvalidInputError);
}

TEST_CASE("interval endpoints themselves have exactly k representations") {
    for (std::int64_t k = 2; k <= 6; ++k) {
        auto [lo, hi] = k_rep_interval(3, 5, k);
        CHECK(popoviciu_count(3, 5, lo) == k);
        CHECK(popoviciu_count(3, 5, hi) == k);
    }
}

// ================================================================
//  search
// ================================================================

TEST_CASE("g_k_search known values") {
    CHECK(g_k_search(DenominationSet({3, 5}), 4) == 67);
    CHECK(g_k_search(DenominationSet({2, 3, 7}), 0) == 1);
    CHECK(g_k_search(DenominationSet({6, 10, 15}), 0) == 29);
    CHECK(g_k_search(DenominationSet({3, 5, 7}), 0) == 4);
    CHECK(g_k_search(DenominationSet({1, 2}), 0) == -1);
    CHECK_THROWS_AS(g_k_search(DenominationSet({3, 5}), -1), InvalidInputError);
}

TEST_CASE("search is the closed form, with consistent structure around it") {
    Limits limits;
    for (std::int64_t a = 1; a <= 14; ++a)
        for (std::int64_t b = a + 1; b <= 14; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            DenominationSet denoms({a, b});
            for (std::int64_t k = 0; k <= 6; ++k) {
                std::int64_t g = g_k_search(denoms, k, limits);
                REQUIRE(g == g_k_closed(a, b, k));
                auto list = list_k_rep(denoms, k, limits);
                if (k >= 1) {
                    REQUIRE(static_cast<std::int64_t>(list.size()) == count_k_rep(a, b, k));
                    REQUIRE(list.front() == smallest_k_rep(denoms, k, limits));
                }
                if (k >= 2)
                    REQUIRE(std::pair{list.front(), list.back()} == k_rep_interval(a, b, k));
            }
        }
}

TEST_CASE("every integer past g_k needs more than k representations") {
    Limits limits;
    for (const auto& denoms : {DenominationSet({3, 5}), DenominationSet({2, 3, 7}),
                               DenominationSet({3, 5, 7}), DenominationSet({6, 10, 15})}) {
        for (std::int64_t k = 0; k <= 3; ++k) {
            std::int64_t g = g_k_search(denoms, k, limits);
            if (g >= 0)
                CHECK(count(denoms, g, Method::Dp) <= k);
            // twice past the termination window, per the monotonicity argument
            std::int64_t stop = 2 * (g + 2 * denoms.max());
            DenumerantTable table(denoms, stop, k + 2);
            for (std::int64_t n = g + 1; n <= stop; ++n)
                REQUIRE(table.at(n) > k);
        }
    }
}

TEST_CASE("search respects a user-chosen starting horizon") {
    Limits tiny;
    tiny.horizon_start = 2;
    CHECK(g_k_search(DenominationSet({3, 5}), 1, tiny) == 22);
    Limits cramped;
    cramped.max_table_cells = 20;
    CHECK_THROWS_AS(g_k_search(DenominationSet({3, 5}), 1, cramped), ResourceLimitError);
}

// ================================================================
//  smallest_k_rep
// ================================================================

TEST_CASE("smallest_k_rep known values") {
    CHECK(smallest_k_rep(DenominationSet({3, 5}), 2) == 15);
    CHECK(smallest_k_rep(DenominationSet({3, 5}), 1) == 3);
    CHECK(smallest_k_rep(DenominationSet({3, 5}), 5) == 60);
    // brute-force scanned: 2 = (1,0,0); 6 = (3,0,0) = (0,2,0)
    CHECK(smallest_k_rep(DenominationSet({2, 3, 7}), 1) == 2);
    CHECK(smallest_k_rep(DenominationSet({2, 3, 7}), 2) == 6);
    CHECK(smallest_k_rep(DenominationSet({6, 10, 15}), 1) == 6);
    CHECK(smallest_k_rep(DenominationSet({3, 5, 7}), 1) == 3);
    CHECK_THROWS_AS(smallest_k_rep(DenominationSet({3, 5}), 0), InvalidInputError);
}

TEST_CASE("smallest_k_rep refuses when the horizon cuts the scan short") {
    Limits limits;
    limits.horizon_start = 4;
    CHECK_THROWS_WITH_AS(smallest_k_rep(DenominationSet({2, 3, 7}), 2, limits),
                         doctest::Contains("horizon"), ResourceLimitError);
}

// ================================================================
//  list_k_rep
// ================================================================

TEST_CASE("list_k_rep known lists") {
    CHECK(list_k_rep(DenominationSet({3, 5}), 0) == std::vector<std::int64_t>{1, 2, 4, 7});
    CHECK(list_k_rep(DenominationSet({2, 3, 7}), 0) == std::vector<std::int64_t>{1});
    CHECK(list_k_rep(DenominationSet({2, 3}), 1) ==
          std::vector<std::int64_t>{2, 3, 4, 5, 7});
    // brute-force scanned full list of integers with a unique representation
    CHECK(list_k_rep(DenominationSet({3, 5}), 1) ==
          std::vector<std::int64_t>{3, 5, 6, 8, 9, 10, 11, 12, 13, 14, 16, 17, 19, 22});
    CHECK(list_k_rep(DenominationSet({1, 2}), 0).empty());
}

TEST_CASE("list_k_rep shape for k = 2") {
    auto list = list_k_rep(DenominationSet({3, 5}), 2);
    CHECK(list.size() == 15);
    CHECK(list.front() == 15);
    CHECK(list.back() == 37);
}

TEST_CASE("nonempty k = 0 list ends at the frobenius number") {
    for (const auto& denoms :
         {DenominationSet({3, 5}), DenominationSet({2, 3, 7}), DenominationSet({6, 10, 15})}) {
        auto list = list_k_rep(denoms, 0);
        REQUIRE(!list.empty());
        CHECK(list.back() == g_k_search(denoms, 0));
    }
}

TEST_CASE("nonrepresentable and representable halves match up to (a-1)(b-1)") {
    for (std::int64_t a = 2; a <= 12; ++a)
        for (std::int64_t b = a + 1; b <= 12; ++b) {
            if (std::gcd(a, b) != 1)
                continue;
            std::int64_t edge = (a - 1) * (b - 1), gaps = 0;
            for (std::int64_t n = 1; n <= edge; ++n)
                if (popoviciu_count(a, b, n) == 0)
                    ++gaps;
            CHECK(gaps == count_nonrep(a, b));
            CHECK(edge - gaps == gaps);
        }
}

// ================================================================
//  report
// ================================================================

TEST_CASE("report for a pair, all k regimes") {
    DenominationSet denoms({3, 5});
    KFrobeniusReport r0 = k_frobenius_report(denoms, 0);
    CHECK(r0.g_k == 7);
    CHECK(!r0.smallest.has_value());
    CHECK(r0.count == 4);
    CHECK(r0.interval == std::pair<std::int64_t, std::int64_t>{1, 7});

    KFrobeniusReport r1 = k_frobenius_report(denoms, 1);
    CHECK(r1.g_k == 22);
    CHECK(r1.smallest == 3);
    CHECK(r1.count == 14);
    CHECK(r1.interval == std::pair<std::int64_t, std::int64_t>{3, 22});

    KFrobeniusReport r2 = k_frobenius_report(denoms, 2);
    CHECK(r2.g_k == 37);
    CHECK(r2.smallest == 15);
    CHECK(r2.count == 15);
    CHECK(r2.interval == std::pair<std::int64_t, std::int64_t>{15, 37});
}

TEST_CASE("report with a unit coin has nothing below k") {
    KFrobeniusReport r = k_frobenius_report(DenominationSet({1, 4}), 0);
    CHECK(r.g_k == -1);
    CHECK(r.count == 0);
    CHECK(!r.smallest.has_value());
    CHECK(!r.interval.has_value());
}

TEST_CASE("report for three denominations agrees with the scan") {
    DenominationSet denoms({2, 3, 7});
    KFrobeniusReport r = k_frobenius_report(denoms, 1);
    auto list = list_k_rep(denoms, 1);
    CHECK(r.g_k == g_k_search(denoms, 1));
    CHECK(r.count == static_cast<std::int64_t>(list.size()));
    CHECK(r.smallest == list.front());
    CHECK(r.interval == std::pair{list.front(), list.back()});
    CHECK(r.smallest == 2);
}

} // TEST_SUITE
