#include <doctest.h>

#include <set>

#include "dsf/degseq.hpp"
#include "dsf/errors.hpp"
#include "dsf/oracle.hpp"

#include "brute_force.hpp"

using dsf::DegreeSequence;

namespace {

DegreeSequence seq(std::vector<int> terms) { return DegreeSequence::normalized(std::move(terms)); }

} // namespace

TEST_CASE("normalize sorts and validates") {
    CHECK(seq({2, 3, 2, 3}).terms() == std::vector<int>{3, 3, 2, 2});
    CHECK(seq({5}).terms() == std::vector<int>{5});
    CHECK_THROWS_AS(seq({1, 0, 1}), dsf::NonPositiveTerm);
    CHECK_THROWS_AS(seq({-2, 1}), dsf::NonPositiveTerm);
    CHECK_THROWS_AS(seq({}), dsf::EmptyInput);
    CHECK(seq({1, 4, 2}).sum() == 7);
    CHECK(seq({1, 4, 2}).n() == 3);
}

TEST_CASE("sequence text round trip") {
    CHECK(dsf::parse_terms("3 3 2 2") == std::vector<int>{3, 3, 2, 2});
    CHECK(dsf::parse_terms("2,3,2,3") == std::vector<int>{2, 3, 2, 3});
    CHECK(dsf::parse_terms(" 4\t1\n2 ") == std::vector<int>{4, 1, 2});
    CHECK(dsf::to_text(seq({2, 3, 2, 3})) == "3 3 2 2");
    CHECK_THROWS_AS(dsf::parse_terms(""), dsf::EmptyInput);
    CHECK_THROWS_AS(dsf::parse_terms("3 x 2"), std::invalid_argument);
}

TEST_CASE("graphicality basics") {
    CHECK(dsf::is_graphical(seq({1, 1})));
    CHECK(dsf::is_graphical(seq({3, 1, 1, 1})));
    CHECK_FALSE(dsf::is_graphical(seq({3, 3, 1, 1})));
    CHECK(dsf::is_graphical(seq({3, 2, 2, 1})));
    CHECK_FALSE(dsf::is_graphical(seq({2, 1})));        // odd sum
    CHECK_FALSE(dsf::is_graphical(seq({4, 1, 1, 1})));  // largest term too big

    const std::vector<int> empty;
    CHECK(dsf::is_graphical(std::span<const int>(empty)));
    const std::vector<int> zeros{0, 0};
    CHECK(dsf::is_graphical(std::span<const int>(zeros)));
    const std::vector<int> with_zero{1, 1, 0};
    CHECK(dsf::is_graphical(std::span<const int>(with_zero)));
    const std::vector<int> bad_zero{2, 0};
    CHECK_FALSE(dsf::is_graphical(std::span<const int>(bad_zero)));
}

TEST_CASE("graphicality agrees with enumerating every graph up to n = 7") {
    for (int n = 1; n <= 7; ++n) {
        const auto realizable = dsf_tests::realizable_degree_multisets(n);
        dsf_tests::for_each_non_increasing(n, 0, n - 1, [&](const std::vector<int>& d) {
            const bool expected = realizable.count(d) > 0;
            CHECK_MESSAGE(dsf::is_graphical(d) == expected, dsf::to_text(d));
        });
    }
}

TEST_CASE("graphicality coincides with having a realization, up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        dsf_tests::for_each_non_increasing(n, 1, n - 1, [&](const std::vector<int>& terms) {
            const auto d = DegreeSequence::normalized(terms);
            CHECK_MESSAGE((dsf::count_realizations(d) > 0) == dsf::is_graphical(d),
                          dsf::to_text(d));
        });
    }
}

TEST_CASE("graphicality agrees with Havel-Hakimi for every length-8 candidate") {
    dsf_tests::for_each_non_increasing(8, 0, 7, [&](const std::vector<int>& d) {
        CHECK_MESSAGE(dsf::is_graphical(d) == dsf_tests::havel_hakimi_graphical(d),
                      dsf::to_text(d));
    });
}

TEST_CASE("potential connectivity characterizations") {
    CHECK(dsf::potentially_connected(seq({2, 2, 2, 2, 2, 2})));
    CHECK_FALSE(dsf::potentially_connected(seq({1, 1, 1, 1})));
    CHECK(dsf::potentially_connected(seq({1, 1})));

    CHECK(dsf::potentially_biconnected(seq({2, 2, 2, 2, 2, 2, 2})));
    CHECK_FALSE(dsf::potentially_biconnected(seq({4, 2, 2, 2, 2, 2, 2})));
    CHECK_FALSE(dsf::potentially_biconnected(seq({2, 2, 1, 1})));
    CHECK_FALSE(dsf::potentially_biconnected(seq({1, 1})));
}

TEST_CASE("potential connectivity matches the realization oracle up to n = 7") {
    using dsf::GraphProperty;
    using dsf::QuantifierMode;
    for (int n = 2; n <= 7; ++n) {
        dsf_tests::for_each_non_increasing(n, 1, n - 1, [&](const std::vector<int>& terms) {
            const auto d = DegreeSequence::normalized(terms);
            if (!dsf::is_graphical(d))
                return;
            CHECK_MESSAGE(dsf::potentially_connected(d) ==
                              dsf::oracle_verdict(d, GraphProperty::connected,
                                                  QuantifierMode::potentially),
                          dsf::to_text(d));
            CHECK_MESSAGE(dsf::potentially_biconnected(d) ==
                              dsf::oracle_verdict(d, GraphProperty::biconnected,
                                                  QuantifierMode::potentially),
                          dsf::to_text(d));
        });
    }
}

TEST_CASE("multiset combinations") {
    const auto combos = [](std::vector<int> pool, int s) {
        std::set<std::vector<int>> out;
        for (auto& c : dsf::multiset_combinations(seq(std::move(pool)), s))
            out.insert(c);
        return out;
    };
    CHECK(combos({2, 2, 1}, 2) == std::set<std::vector<int>>{{2, 2}, {2, 1}});
    CHECK(combos({3, 2, 1}, 3) == std::set<std::vector<int>>{{3, 2, 1}});
    CHECK(combos({2, 2, 2, 2}, 2) == std::set<std::vector<int>>{{2, 2}});
    CHECK(combos({3, 2, 1}, 0) == std::set<std::vector<int>>{{}});

    SUBCASE("stops early when the visitor asks") {
        int visits = 0;
        const std::vector<int> pool{3, 2, 2, 1};
        const bool finished = dsf::for_each_multiset_combination(
            pool, 2, [&](std::span<const int>) { return ++visits < 2; });
        CHECK_FALSE(finished);
        CHECK(visits == 2);
    }
}

TEST_CASE("multiset combinations match the index-subset reference") {
    const std::vector<std::vector<int>> pools = {
        {1}, {2, 1}, {2, 2, 1}, {3, 2, 2, 1, 1}, {4, 4, 3, 2, 2, 2, 1}, {2, 2, 2, 2, 2}};
    for (const auto& pool : pools) {
        for (int s = 0; s <= static_cast<int>(pool.size()); ++s) {
            std::set<std::vector<int>> got;
            std::size_t emitted = 0;
            dsf::for_each_multiset_combination(pool, s, [&](std::span<const int> c) {
                got.emplace(c.begin(), c.end());
                ++emitted;
                return true;
            });
            const auto expected = dsf_tests::subsets_by_index(pool, s);
            CHECK(got == expected);
            CHECK(emitted == expected.size()); // no duplicate emissions
        }
    }
}

TEST_CASE("multiset subtraction") {
    CHECK(dsf::multiset_subtract(seq({3, 2, 2, 1}), std::vector<int>{2}).terms() ==
          std::vector<int>{3, 2, 1});
    CHECK(dsf::multiset_subtract(seq({2, 2}), std::vector<int>{2, 2}).empty());
    CHECK_THROWS_AS(dsf::multiset_subtract(seq({3, 1}), std::vector<int>{2}),
                    dsf::NotSubMultiset);
}

TEST_CASE("multiset delta rebuilds derived sequences") {
    const auto base = seq({4, 4, 4, 2, 2, 2, 2});
    dsf::MultisetDelta delta{&base, {4, 2, 2}, {2}};
    CHECK(delta.apply().terms() == std::vector<int>{4, 4, 2, 2, 2});
    dsf::MultisetDelta bad{&base, {5}, {}};
    CHECK_THROWS_AS(bad.apply(), dsf::NotSubMultiset);
}
