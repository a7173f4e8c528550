#include "doctest.h"

#include "bmkit/errors.hpp"
#include "bmkit/partitions.hpp"
#include "bmkit/types.hpp"

#include <vector>

using namespace bmkit;

TEST_SUITE("types") {

TEST_CASE("basic type validation") {
    BasicType a("a", 2);
    CHECK(a.dual_label == "a"); // self-dual unless stated
    BasicType b("b", 1, "c");
    CHECK(b.dual_label == "c");
    CHECK_THROWS_AS(BasicType("", 1), argument_error);
    CHECK_THROWS_AS(BasicType("a", 0), argument_error);
    CHECK_THROWS_AS(BasicType("a", 1, ""), argument_error);
}

TEST_CASE("inertial type normalization") {
    InertialType t({{BasicType("b", 1), Partition({1})},
                    {BasicType("a", 1), Partition({2})}});
    REQUIRE(t.entries().size() == 2);
    CHECK(t.entries()[0].first.label == "a"); // sorted by letter
    CHECK(t.entries()[1].first.label == "b");

    // Empty partitions vanish from the support.
    InertialType u({{BasicType("a", 1), Partition{}}});
    CHECK(u.empty());
    CHECK(u == InertialType{});

    CHECK_THROWS_AS(InertialType({{BasicType("a", 1), Partition({1})},
                                  {BasicType("a", 1), Partition({2})}}),
                    argument_error);
}

TEST_CASE("degree and supercuspidal support") {
    CHECK(type_degree(InertialType{}) == 0);
    CHECK(type_degree(unipotent_type(Partition({2, 1}))) == 3);

    InertialType t({{BasicType("a", 1), Partition({2})},
                    {BasicType("b", 2), Partition({1, 1})}});
    CHECK(type_degree(t) == 6); // 1*2 + 2*2

    auto s = scs(t);
    REQUIRE(s.size() == 2);
    CHECK(s.at(BasicType("a", 1)) == 2);
    CHECK(s.at(BasicType("b", 2)) == 2);
    CHECK(scs(InertialType{}).empty());
}

TEST_CASE("unipotent types") {
    CHECK(unipotent_type(Partition{}).empty());
    auto t = unipotent_type(Partition({3, 1}));
    REQUIRE(t.entries().size() == 1);
    CHECK(t.entries()[0].first == BasicType("1", 1));
    CHECK(t.entries()[0].second == Partition({3, 1}));
}

TEST_CASE("fibers over a support") {
    // Single letter: the fiber is just the partitions of its weight.
    auto fiber = types_with_scs({{BasicType("1", 1), 2}});
    REQUIRE(fiber.size() == 2);
    CHECK(fiber[0] == unipotent_type(Partition({2})));
    CHECK(fiber[1] == unipotent_type(Partition({1, 1})));

    // Two letters: product of partition counts, first letter most significant.
    auto two = types_with_scs({{BasicType("a", 1), 2}, {BasicType("b", 1), 2}});
    REQUIRE(two.size() == 4);
    CHECK(two[0] == InertialType({{BasicType("a", 1), Partition({2})},
                                  {BasicType("b", 1), Partition({2})}}));
    CHECK(two[1] == InertialType({{BasicType("a", 1), Partition({2})},
                                  {BasicType("b", 1), Partition({1, 1})}}));
    CHECK(two[3] == InertialType({{BasicType("a", 1), Partition({1, 1})},
                                  {BasicType("b", 1), Partition({1, 1})}}));

    // Sizes multiply across the support.
    auto f = types_with_scs(
        {{BasicType("a", 1), 4}, {BasicType("b", 2), 3}, {BasicType("c", 1), 2}});
    CHECK(f.size() == 5 * 3 * 2);
    for (const auto& t : f) {
        CHECK(type_degree(t) == 4 * 1 + 3 * 2 + 2 * 1);
        CHECK(scs(t) == ScsMap{{BasicType("a", 1), 4},
                               {BasicType("b", 2), 3},
                               {BasicType("c", 1), 2}});
    }

    CHECK_THROWS_AS(types_with_scs({{BasicType("a", 1), 0}}), argument_error);
}

TEST_CASE("type dominance is a partial order on each fiber") {
    std::vector<ScsMap> supports = {
        {{BasicType("1", 1), 6}},
        {{BasicType("a", 1), 3}, {BasicType("b", 1), 3}},
        {{BasicType("a", 1), 2}, {BasicType("b", 2), 2}},
        {{BasicType("a", 1), 2}, {BasicType("b", 1), 2}, {BasicType("c", 1), 2}},
    };
    for (const auto& s : supports) {
        auto fiber = types_with_scs(s);
        for (size_t i = 0; i < fiber.size(); ++i) {
            CHECK(type_dominates(fiber[i], fiber[i]));
            for (size_t j = 0; j < fiber.size(); ++j) {
                bool ij = type_dominates(fiber[i], fiber[j]);
                bool ji = type_dominates(fiber[j], fiber[i]);
                if (ij && ji) CHECK(i == j);
                // enumeration refines dominance
                if (j < i) CHECK_FALSE(ij);
                if (ij)
                    for (size_t k = 0; k < fiber.size(); ++k)
                        if (type_dominates(fiber[j], fiber[k]))
                            CHECK(type_dominates(fiber[i], fiber[k]));
            }
        }
    }
}

TEST_CASE("dominance requires matching supports") {
    auto a = unipotent_type(Partition({2}));
    InertialType b({{BasicType("a", 1), Partition({2})}});
    CHECK_FALSE(type_dominates(a, b));
    CHECK_FALSE(type_dominates(b, a));
    CHECK(type_dominates(unipotent_type(Partition({2})),
                         unipotent_type(Partition({1, 1}))));
    CHECK_FALSE(type_dominates(unipotent_type(Partition({1, 1})),
                               unipotent_type(Partition({2}))));
}

TEST_CASE("duality swaps partnered letters and fixes partitions") {
    BasicType x("x", 1, "y");
    BasicType y("y", 1, "x");
    InertialType t({{x, Partition({2, 1})}, {y, Partition({1})}});
    auto d = dual_type(t);
    REQUIRE(d.entries().size() == 2);
    CHECK(d.entries()[0].first == x);
    CHECK(d.entries()[0].second == Partition({1}));      // came from y
    CHECK(d.entries()[1].second == Partition({2, 1}));   // came from x
    CHECK(dual_type(d) == t);                            // involution

    // Self-dual letters are fixed pointwise.
    auto u = unipotent_type(Partition({3, 1}));
    CHECK(dual_type(u) == u);

    // Two letters dualizing onto the same label cannot coexist.
    InertialType bad({{BasicType("a", 1, "c"), Partition({1})},
                      {BasicType("b", 1, "c"), Partition({1})}});
    CHECK_THROWS_AS(dual_type(bad), argument_error);
}

} // TEST_SUITE
