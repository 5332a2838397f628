#include "cattab/tables.hpp"

#include "cattab/power_series.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cattab;

namespace {

CatalanTuple tup(std::vector<int> e) { return CatalanTuple(std::move(e)); }

CatalanTable tab(std::vector<std::vector<int>> pockets) {
    std::vector<CatalanTuple> tuples;
    tuples.reserve(pockets.size());
    for (auto& p : pockets) tuples.emplace_back(std::move(p));
    return CatalanTable(std::move(tuples));
}

}  // namespace

TEST_CASE("length tuples") {
    CHECK(tab({{0}, {0}}).length_tuple() == tup({1, 0}));
    CHECK(tab({{2, 0, 0}, {1, 1, 0}, {0}, {0}, {0}, {1, 0}, {0}}).length_tuple() ==
          tup({3, 2, 0, 0, 0, 1, 0}));
    CHECK(tab({{1, 0}, {1, 0}, {0}, {0}}).length_tuple() == tup({2, 1, 0, 0}));
}

TEST_CASE("construction rejects invalid pocket profiles") {
    CHECK_THROWS_AS(tab({{0}}), std::invalid_argument);              // (1) is no Catalan tuple
    CHECK_THROWS_AS(tab({{0}, {1, 0}}), std::invalid_argument);      // (1,1) sums wrong
    CHECK_THROWS_AS(tab({{1, 0}, {1, 0}}), std::invalid_argument);   // (2,1) sums wrong
    CHECK_THROWS_AS(CatalanTable({}), std::invalid_argument);
}

TEST_CASE("merging tables") {
    CHECK(merge_at_root(tab({{1, 0}, {0}, {0}}), tab({{0}, {1, 0}, {0}})) ==
          tab({{2, 0, 0}, {0}, {0}, {1, 0}, {0}}));
    CHECK(merge_at_root(tab({{1, 0}, {1, 1, 0}, {0}, {0}, {0}}), tab({{0}, {1, 0}, {0}})) ==
          tab({{2, 0, 0}, {1, 1, 0}, {0}, {0}, {0}, {1, 0}, {0}}));
    CHECK(merge_at_root(tab({{0}, {0}}), tab({{1, 0}, {0}, {0}})) ==
          tab({{1, 1, 0}, {0}, {0}, {0}}));

    CHECK(merge_at_first_pocket(tab({{0}, {1, 0}, {0}}), tab({{1, 0}, {0}, {0}})) ==
          tab({{0}, {2, 1, 0, 0}, {0}, {0}, {0}}));
    CHECK(merge_at_first_pocket(tab({{0}, {0}}), tab({{1, 0}, {0}, {0}})) ==
          tab({{0}, {1, 1, 0}, {0}, {0}}));
    CHECK(merge_at_first_pocket(tab({{2, 0, 0}, {0}, {0}, {1, 0}, {0}}),
                                tab({{1, 0}, {0}, {0}})) ==
          tab({{2, 0, 0}, {1, 1, 0}, {0}, {0}, {0}, {1, 0}, {0}}));
}

TEST_CASE("splitting tables") {
    CHECK(split_at_root(tab({{2, 0, 0}, {0}, {0}, {1, 0}, {0}})) ==
          std::pair(tab({{1, 0}, {0}, {0}}), tab({{0}, {1, 0}, {0}})));
    CHECK(split_at_root(tab({{2, 0, 0}, {0}, {0}, {0}})) ==
          std::pair(tab({{1, 0}, {0}, {0}}), tab({{0}, {0}})));
    CHECK_THROWS_AS(split_at_root(tab({{0}, {1, 0}, {0}})), std::invalid_argument);

    CHECK(split_at_first_pocket(tab({{0}, {2, 1, 0, 0}, {0}, {0}, {0}})) ==
          std::pair(tab({{0}, {1, 0}, {0}}), tab({{1, 0}, {0}, {0}})));
    CHECK(split_at_first_pocket(tab({{0}, {2, 0, 0}, {0}, {0}})) ==
          std::pair(tab({{0}, {1, 0}, {0}}), tab({{0}, {0}})));
    CHECK_THROWS_AS(split_at_first_pocket(tab({{2, 0, 0}, {0}, {0}, {0}})),
                    std::invalid_argument);
    // The partial-sum walk touches the target level inside the spliced block
    // here; the split must still end the block at the first strict descent.
    CHECK(split_at_first_pocket(tab({{0}, {1, 0}, {1, 0}, {0}})) ==
          std::pair(tab({{0}, {0}}), tab({{0}, {1, 0}, {0}})));
}

TEST_CASE("enumeration reproduces the known small sets in order") {
    const auto t1 = enumerate_tables(1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0] == tab({{0}, {0}}));

    const auto t2 = enumerate_tables(2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == tab({{1, 0}, {0}, {0}}));
    CHECK(t2[1] == tab({{0}, {1, 0}, {0}}));

    const auto t3 = enumerate_tables(3);
    REQUIRE(t3.size() == 7);
    CHECK(t3[0] == tab({{2, 0, 0}, {0}, {0}, {0}}));
    CHECK(t3[1] == tab({{1, 1, 0}, {0}, {0}, {0}}));
    CHECK(t3[2] == tab({{1, 0}, {1, 0}, {0}, {0}}));
    CHECK(t3[3] == tab({{1, 0}, {0}, {1, 0}, {0}}));
    CHECK(t3[4] == tab({{0}, {2, 0, 0}, {0}, {0}}));
    CHECK(t3[5] == tab({{0}, {1, 1, 0}, {0}, {0}}));
    CHECK(t3[6] == tab({{0}, {1, 0}, {1, 0}, {0}}));
}

TEST_CASE("enumeration counts and structure up to length 6") {
    for (int k = 1; k <= 6; ++k) {
        const auto set = enumerate_tables(k);
        CHECK(Integer(set.size()) == count_tables(k - 1));
        CHECK(std::adjacent_find(set.begin(), set.end()) == set.end());
        std::size_t trivial_first = 0;
        std::size_t trivial_zeroth = 0;
        std::size_t both_splittable = 0;
        for (const CatalanTable& t : set) {
            CHECK_NOTHROW(t.length_tuple());  // validates as a Catalan tuple
            if (t.pocket(1).length() == 0) ++trivial_first;
            if (t.pocket(0).length() == 0) ++trivial_zeroth;
            if (t.pocket(0).length() >= 1 && t.pocket(1).length() >= 1) ++both_splittable;
        }
        CHECK(Integer(trivial_first) == count_trivial_first_pocket(k - 1));
        CHECK(Integer(trivial_zeroth) == count_trivial_first_pocket(k - 1));
        // For k >= 2 no table has both ends trivial, so inclusion-exclusion
        // pins the doubly-splittable count.
        if (k >= 2)
            CHECK(Integer(both_splittable) ==
                  count_tables(k - 1) - 2 * count_trivial_first_pocket(k - 1));
    }
}

TEST_CASE("merge closure generates exactly the same tables") {
    for (int k = 1; k <= 6; ++k) {
        auto constructive = enumerate_tables(k);
        const auto merged = enumerate_tables_by_merging(k);
        std::sort(constructive.begin(), constructive.end());
        CHECK(constructive == merged);
    }
}

TEST_CASE("split/merge round-trips exhaustively up to length 5") {
    for (int k = 2; k <= 5; ++k) {
        for (const CatalanTable& t : enumerate_tables(k)) {
            const bool has_root_split = t.pocket(0).length() >= 1;
            const bool has_first_split = t.pocket(1).length() >= 1;
            CHECK((has_root_split || has_first_split));
            if (has_root_split) {
                const auto [a, b] = split_at_root(t);
                CHECK(merge_at_root(a, b) == t);
                CHECK(a.length() + b.length() == k);
            }
            if (has_first_split) {
                const auto [a, b] = split_at_first_pocket(t);
                CHECK(merge_at_first_pocket(a, b) == t);
                CHECK(a.length() + b.length() == k);
            }
        }
    }
}

TEST_CASE("count tables match the reference rows") {
    const long d[] = {1, 2, 7, 30, 143, 728, 3876, 21318, 120175};
    const long f[] = {1, 1, 3, 12, 55, 273, 1428, 7752, 43263};
    for (int k = 0; k <= 8; ++k) {
        CHECK(count_tables(k) == d[k]);
        CHECK(count_trivial_first_pocket(k) == f[k]);
    }
}

TEST_CASE("count recursions reproduce the closed forms") {
    // d_k = f_k + sum d_{l-1} d_{k-l}, f_k = sum f_{l-1} d_{k-l}
    for (int k = 1; k <= 10; ++k) {
        Integer f_k = 0;
        Integer dd = 0;
        for (int l = 1; l <= k; ++l) {
            f_k += count_trivial_first_pocket(l - 1) * count_tables(k - l);
            dd += count_tables(l - 1) * count_tables(k - l);
        }
        CHECK(f_k == count_trivial_first_pocket(k));
        CHECK(f_k + dd == count_tables(k));
    }
}

TEST_CASE("pocket sum identity") {
    SUBCASE("k=0 is the single tuple (1,0)") {
        const auto report = verify_pocket_sum_identity(0);
        CHECK(report.pocket_tree_sum == 1);
        CHECK(report.equal);
    }
    SUBCASE("k=2 against an independently evaluated sum") {
        // Over the five tuples of length 3: c_2 + c_1 c_1 + c_1 c_1 + c_0 c_2 + 1 = 7.
        Integer by_hand = catalan_number(2) * catalan_number(0) * catalan_number(0) +
                          catalan_number(1) * catalan_number(1) +
                          catalan_number(1) * catalan_number(1) +
                          catalan_number(0) * catalan_number(2) + 1;
        REQUIRE(by_hand == 7);
        const auto report = verify_pocket_sum_identity(2);
        CHECK(report.pocket_tree_sum == by_hand);
        CHECK(report.closed_form == 7);
        CHECK(report.equal);
    }
    SUBCASE("holds for k up to 6") {
        for (int k = 0; k <= 6; ++k) CHECK(verify_pocket_sum_identity(k).equal);
    }
}

TEST_CASE("power series arithmetic") {
    PowerSeries x = PowerSeries::monomial(6, 1);
    PowerSeries one = PowerSeries::monomial(6, 0);
    const PowerSeries p = (one + x) * (one - x);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == -1);
    CHECK((p - one + x * x).is_zero());
    CHECK(x.shifted_down() == PowerSeries::monomial(5, 0));
    CHECK_THROWS_AS(one.shifted_down(), std::invalid_argument);
}

TEST_CASE("generating function report") {
    SUBCASE("order 1 keeps only the leading terms") {
        const auto report = verify_generating_functions(1);
        REQUIRE(report.trivial_pocket_closed.size() == 1);
        CHECK(report.trivial_pocket_closed[0] == 1);   // H = x + O(x^2)
        CHECK(report.table_count_closed[0] == 1);      // G = x + O(x^2)
        CHECK(report.all_hold());
    }
    SUBCASE("order 9 recursion coefficients") {
        const auto report = verify_generating_functions(9);
        CHECK(report.table_count_recursive[4] == 143);
        CHECK(report.trivial_pocket_recursive[4] == 55);
        CHECK(report.all_hold());
    }
    SUBCASE("identities hold exactly to order 40") {
        CHECK(verify_generating_functions(40).all_hold());
    }
}

TEST_CASE("table enumeration guard") {
    CHECK_THROWS_AS(enumerate_tables(10), EnumerationLimitError);
    CHECK_THROWS_AS(enumerate_tables(4, 3), EnumerationLimitError);
    CHECK_THROWS_AS(enumerate_tables(0), std::invalid_argument);
}
