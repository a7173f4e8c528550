#include "doctest.h"

#include "bmkit/errors.hpp"
#include "bmkit/partitions.hpp"

#include <algorithm>
#include <map>

using namespace bmkit;

TEST_SUITE("partitions") {

TEST_CASE("construction normalizes and validates") {
    CHECK(Partition{}.degree() == 0);
    CHECK(Partition({3, 1}).degree() == 4);
    CHECK(Partition({2, 0, 0}) == Partition({2}));      // trailing zeros stripped
    CHECK(Partition({0}) == Partition{});
    CHECK_THROWS_AS(Partition({1, 2}), argument_error); // must be non-increasing
    CHECK_THROWS_AS(Partition({2, 0, 1}), argument_error);
}

TEST_CASE("from_multiset sorts and strips zeros") {
    CHECK(Partition::from_multiset({1, 3, 0, 2}) == Partition({3, 2, 1}));
    CHECK(Partition::from_multiset({0, 0}) == Partition{});
    CHECK(Partition::from_multiset({}) == Partition{});
}

TEST_CASE("enumeration order: degree first, then (n) before finer shapes") {
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    // The list must agree with the comparison operator.
    CHECK(std::is_sorted(p4.begin(), p4.end()));
    CHECK(Partition({2}) > Partition({1})); // degree dominates the order
}

TEST_CASE("partition counts match the recurrence") {
    // p(n) for n = 0..20, computed independently of the enumerator.
    const unsigned long expected[] = {1,   1,   2,   3,   5,   7,  11,
                                      15,  22,  30,  42,  56,  77, 101,
                                      135, 176, 231, 297, 385, 490, 627};
    for (unsigned n = 0; n <= 20; ++n) {
        CHECK(partition_count(n) == Int(expected[n]));
        if (n <= 14) CHECK(partitions_of(n).size() == expected[n]);
    }
}

TEST_CASE("conjugate is an involution and matches hand examples") {
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition({2, 2})) == Partition({2, 2}));
    CHECK(conjugate(Partition{}) == Partition{});
    for (unsigned n = 0; n <= 9; ++n)
        for (const auto& p : partitions_of(n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("dominance on hand examples") {
    CHECK(dominates(Partition({3}), Partition({2, 1})));
    CHECK(dominates(Partition({2, 1}), Partition({1, 1, 1})));
    CHECK_FALSE(dominates(Partition({1, 1, 1}), Partition({2, 1})));
    // (3,1,1,1) and (2,2,2) are incomparable.
    CHECK_FALSE(dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    CHECK_FALSE(dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
    // Different degrees never compare.
    CHECK_FALSE(dominates(Partition({2}), Partition({3})));
    CHECK_FALSE(dominates(Partition({3}), Partition({2})));
}

TEST_CASE("dominance is a partial order and conjugation reverses it") {
    for (unsigned n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        for (const auto& a : ps)
            for (const auto& b : ps) {
                bool ab = dominates(a, b);
                bool ba = dominates(b, a);
                if (ab && ba) CHECK(a == b);
                CHECK(ab == dominates(conjugate(b), conjugate(a)));
                if (ab)
                    for (const auto& c : ps)
                        if (dominates(b, c)) CHECK(dominates(a, c));
            }
    }
}

TEST_CASE("enumeration order refines dominance") {
    // The canonical order must list a partition before anything it dominates.
    for (unsigned n = 1; n <= 9; ++n) {
        auto ps = partitions_of(n);
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = i + 1; j < ps.size(); ++j)
                CHECK_FALSE(dominates(ps[j], ps[i]));
    }
}

TEST_CASE("multinomial coefficients") {
    CHECK(multinomial(Partition{}) == 1);
    CHECK(multinomial(Partition({5})) == 1);
    CHECK(multinomial(Partition({2, 1})) == 3);
    CHECK(multinomial(Partition({2, 2})) == 6);
    CHECK(multinomial(Partition({1, 1, 1, 1})) == 24);
    CHECK(multinomial(Partition({3, 2, 1})) == 60);
}

TEST_CASE("hook length counts and the square-sum identity") {
    CHECK(hook_length_count(Partition{}) == 1);
    CHECK(hook_length_count(Partition({4})) == 1);
    CHECK(hook_length_count(Partition({2, 1})) == 2);
    CHECK(hook_length_count(Partition({2, 2})) == 2);
    CHECK(hook_length_count(Partition({3, 2})) == 5);
    CHECK(hook_length_count(Partition({3, 2, 1})) == 16);

    // sum over shapes of f^2 counts pairs of standard tableaux: n!.
    for (unsigned n = 1; n <= 8; ++n) {
        Int total = 0, fact = 1;
        for (const auto& p : partitions_of(n)) {
            Int f = hook_length_count(p);
            total += f * f;
        }
        for (unsigned k = 2; k <= n; ++k) fact *= k;
        CHECK(total == fact);
    }
}

TEST_CASE("degree guard") {
    CHECK_THROWS_AS(limits::check_degree(limits::max_degree() + 1, "test"),
                    resource_error);
    CHECK_NOTHROW(limits::check_degree(limits::max_degree(), "test"));
    CHECK_THROWS_AS(limits::set_max_degree(0), argument_error);
}

} // TEST_SUITE
