#include "cattab/tuples.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace cattab;

namespace {

CatalanTuple tup(std::vector<int> e) { return CatalanTuple(std::move(e)); }

}  // namespace

TEST_CASE("validation accepts the defining examples") {
    CHECK(tup({0}).length() == 0);
    CHECK(tup({1, 1, 0}).length() == 2);
    CHECK(tup({2, 0, 0}).length() == 2);
    CHECK(tup({6, 0, 0, 1, 3, 0, 0, 0, 2, 2, 0, 0, 0, 0, 0}).length() == 14);
}

TEST_CASE("validation rejects with the first violated condition") {
    CHECK_THROWS_WITH_AS(tup({0, 1}), "not a Catalan tuple: partial sum 0 at index 0 is not greater than 0",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(tup({}), "not a Catalan tuple: tuple must have at least one entry",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(tup({2, -1, 0}), "not a Catalan tuple: entry at index 1 is negative",
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(tup({2, 0}), "not a Catalan tuple: entries sum to 2, expected length 1",
                         std::invalid_argument);
    CHECK_THROWS_AS(tup({1, 0, 0}), std::invalid_argument);  // total too small
    CHECK_THROWS_AS(tup({1}), std::invalid_argument);        // k=0 needs entry 0
}

TEST_CASE("partial sums") {
    const CatalanTuple t200 = tup({2, 0, 0});
    CHECK(t200.partial_sum(0) == 2);
    CHECK(t200.partial_sum(1) == 1);
    CHECK(t200.partial_sum(2) == 0);  // always 0 at the final index
    CHECK(tup({1, 1, 0}).partial_sum(1) == 1);
    CHECK_THROWS_AS(t200.partial_sum(3), std::out_of_range);
    CHECK_THROWS_AS(t200.partial_sum(-1), std::out_of_range);
}

TEST_CASE("first index attaining a partial sum") {
    CHECK(tup({2, 0, 0}).first_index_with_partial_sum(1) == 1);
    CHECK(tup({3, 0, 0, 1, 0}).first_index_with_partial_sum(1) == 2);
    CHECK(tup({1, 3, 0, 0, 0}).first_index_with_partial_sum(2) == 2);
    // a = 0 is attained exactly at the final index.
    CHECK(tup({1, 0}).first_index_with_partial_sum(0) == 1);
    CHECK(tup({2, 1, 0, 0}).first_index_with_partial_sum(0) == 3);
    // Values never attained are reported as absent.
    CHECK_FALSE(tup({1, 0}).first_index_with_partial_sum(5).has_value());
    CHECK_FALSE(tup({0}).first_index_with_partial_sum(1).has_value());
}

TEST_CASE("grafting") {
    CHECK(graft_last(tup({0}), tup({0})) == tup({1, 0}));
    CHECK(graft_last(tup({1, 0}), tup({0})) == tup({2, 0, 0}));
    CHECK(graft_last(tup({0}), tup({1, 0})) == tup({1, 1, 0}));
    CHECK(graft_last(tup({2, 1, 0, 0}), tup({2, 0, 0})) == tup({3, 1, 0, 0, 2, 0, 0}));

    CHECK(graft_first(tup({0}), tup({0})) == tup({1, 0}));
    CHECK(graft_first(tup({1, 0}), tup({0})) == tup({2, 0, 0}));
    CHECK(graft_first(tup({0}), tup({1, 0})) == tup({1, 1, 0}));
    CHECK(graft_first(tup({2, 0, 2, 0, 0}), tup({1, 0})) == tup({3, 1, 0, 0, 2, 0, 0}));
}

TEST_CASE("splitting") {
    CHECK(split_last(tup({2, 0, 0})) == std::pair(tup({1, 0}), tup({0})));
    CHECK(split_last(tup({1, 1, 0})) == std::pair(tup({0}), tup({1, 0})));
    CHECK(split_last(tup({1, 0})) == std::pair(tup({0}), tup({0})));

    CHECK(split_first(tup({1, 1, 0})) == std::pair(tup({0}), tup({1, 0})));
    CHECK(split_first(tup({2, 1, 0, 0})) == std::pair(tup({1, 0}), tup({1, 0})));
    CHECK(split_first(tup({3, 1, 0, 0, 2, 0, 0})) == std::pair(tup({2, 0, 2, 0, 0}), tup({1, 0})));

    CHECK_THROWS_AS(split_last(tup({0})), std::invalid_argument);
    CHECK_THROWS_AS(split_first(tup({0})), std::invalid_argument);
}

TEST_CASE("enumeration produces the known small sets in canonical order") {
    const auto c0 = enumerate_tuples(0);
    REQUIRE(c0.size() == 1);
    CHECK(c0[0] == tup({0}));

    const auto c2 = enumerate_tuples(2);
    REQUIRE(c2.size() == 2);
    CHECK(c2[0] == tup({2, 0, 0}));
    CHECK(c2[1] == tup({1, 1, 0}));

    const auto c3 = enumerate_tuples(3);
    REQUIRE(c3.size() == 5);
    CHECK(c3[0] == tup({3, 0, 0, 0}));
    CHECK(c3[1] == tup({2, 1, 0, 0}));
    CHECK(c3[2] == tup({2, 0, 1, 0}));
    CHECK(c3[3] == tup({1, 2, 0, 0}));
    CHECK(c3[4] == tup({1, 1, 1, 0}));
}

TEST_CASE("enumeration invariants up to length 9") {
    for (int k = 0; k <= 9; ++k) {
        const auto set = enumerate_tuples(k);
        CHECK(Integer(set.size()) == catalan_number(k));
        CHECK(std::is_sorted(set.begin(), set.end(), std::greater<>()));
        CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
        for (const CatalanTuple& t : set) {
            if (k > 0) {
                CHECK(t[0] > 0);
                CHECK(t[k] == 0);
            }
            for (int l = 0; l < k; ++l) CHECK(t.partial_sum(l) >= 1);
        }
    }
}

TEST_CASE("split/graft round-trips exhaustively up to length 9") {
    for (int k = 1; k <= 9; ++k) {
        for (const CatalanTuple& t : enumerate_tuples(k)) {
            const auto [a, b] = split_last(t);
            CHECK(graft_last(a, b) == t);
            CHECK(a.length() + b.length() + 1 == k);
            const auto [c, d] = split_first(t);
            CHECK(graft_first(c, d) == t);
            CHECK(c.length() + d.length() + 1 == k);
        }
    }
}

TEST_CASE("grafts of random valid pairs validate and invert") {
    SplitMix64 rng(13);
    for (int round = 0; round < 300; ++round) {
        const int ka = static_cast<int>(rng.next_below(6));
        const int kb = static_cast<int>(rng.next_below(6));
        const auto& sa = detail::tuple_set(ka);
        const auto& sb = detail::tuple_set(kb);
        const CatalanTuple& a = sa[rng.next_below(sa.size())];
        const CatalanTuple& b = sb[rng.next_below(sb.size())];
        const CatalanTuple last = graft_last(a, b);   // constructor re-validates
        const CatalanTuple first = graft_first(a, b);
        CHECK(last.length() == ka + kb + 1);
        CHECK(first.length() == ka + kb + 1);
        CHECK(split_last(last) == std::pair(a, b));
        CHECK(split_first(first) == std::pair(a, b));
    }
}

TEST_CASE("catalan numbers match the reference row") {
    const long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (int k = 0; k < 10; ++k) CHECK(catalan_number(k) == expected[k]);
    CHECK(catalan_number(15) == 9694845);
}

TEST_CASE("enumeration guard") {
    CHECK_THROWS_AS(enumerate_tuples(13), EnumerationLimitError);
    CHECK_THROWS_AS(enumerate_tuples(3, 2), EnumerationLimitError);
    CHECK_NOTHROW(enumerate_tuples(3, 3));
    CHECK_THROWS_AS(enumerate_tuples(-1), std::invalid_argument);
}
