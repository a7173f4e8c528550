#include "doctest.h"

#include "bmkit/bmcycles.hpp"
#include "bmkit/errors.hpp"
#include "bmkit/partitions.hpp"
#include "bmkit/symrep.hpp"
#include "bmkit/types.hpp"

#include <string>
#include <vector>

using namespace bmkit;

namespace {

InertialType uni(std::initializer_list<unsigned> parts) {
    return unipotent_type(Partition(parts));
}

// All supports with the given letters totalling exactly `budget` weight.
std::vector<ScsMap> supports_on(const std::vector<BasicType>& letters,
                                unsigned budget) {
    std::vector<ScsMap> out;
    std::vector<unsigned> w(letters.size(), 0);
    auto rec = [&](auto&& self, size_t i, unsigned rem) -> void {
        if (i + 1 == letters.size()) {
            if (rem % letters[i].dim != 0) return;
            ScsMap s;
            for (size_t j = 0; j < i; ++j)
                if (w[j]) s.emplace(letters[j], w[j]);
            if (rem) s.emplace(letters[i], rem / letters[i].dim);
            if (!s.empty()) out.push_back(std::move(s));
            return;
        }
        for (unsigned d = 0; d * letters[i].dim <= rem; ++d) {
            w[i] = d;
            self(self, i + 1, rem - d * letters[i].dim);
        }
    };
    if (!letters.empty()) rec(rec, 0, budget);
    return out;
}

} // namespace

TEST_SUITE("bmcycles") {

TEST_CASE("formal sums cancel exactly") {
    VirtualRep v;
    CHECK(v.zero());
    RepLabel l = KTypeLabel{uni({2})};
    v.add(l, 2);
    v.add(l, -2);
    CHECK(v.zero());
    v.add(l, 0);
    CHECK(v.coeffs().empty());
    v.add(l, 3);
    CHECK(v.coeff(l) == 3);
    CHECK(v.coeff(RepLabel{KTypeLabel{uni({1, 1})}}) == 0);
}

TEST_CASE("multiplicities on the unipotent fiber of degree 2") {
    CHECK(mult(uni({2}), uni({2})) == 1);
    CHECK(mult(uni({2}), uni({1, 1})) == 1);
    CHECK(mult(uni({1, 1}), uni({2})) == 0);
    CHECK(mult(uni({1, 1}), uni({1, 1})) == 1);
}

TEST_CASE("multiplicities multiply over the support") {
    InertialType a({{BasicType("a", 1), Partition({2})},
                    {BasicType("b", 1), Partition({2, 1})}});
    InertialType b({{BasicType("a", 1), Partition({1, 1})},
                    {BasicType("b", 1), Partition({1, 1, 1})}});
    CHECK(mult(a, b) == kostka(Partition({2}), Partition({1, 1})) *
                            kostka(Partition({2, 1}), Partition({1, 1, 1})));
    CHECK(mult(a, a) == 1);

    // A letter missing on one side forces multiplicity zero.
    InertialType c({{BasicType("a", 1), Partition({2})}});
    CHECK(mult(a, c) == 0);
    CHECK(mult(c, a) == 0);

    // Same label with conflicting data is an error, not a zero.
    InertialType bad({{BasicType("a", 2), Partition({1})}});
    CHECK_THROWS_AS(mult(c, bad), argument_error);
}

TEST_CASE("fiber multiplicity matrices are unitriangular") {
    std::vector<std::vector<BasicType>> alphabets = {
        {BasicType("1", 1)},
        {BasicType("a", 1), BasicType("b", 1)},
        {BasicType("a", 1), BasicType("b", 2)},
        {BasicType("a", 1), BasicType("b", 1), BasicType("c", 1)},
    };
    for (const auto& letters : alphabets)
        for (unsigned budget = 1; budget <= 6; ++budget)
            for (const auto& s : supports_on(letters, budget)) {
                auto fiber = types_with_scs(s);
                for (size_t i = 0; i < fiber.size(); ++i) {
                    CHECK(mult(fiber[i], fiber[i]) == 1);
                    for (size_t j = 0; j < fiber.size(); ++j) {
                        Int m = mult(fiber[i], fiber[j]);
                        if (j < i) CHECK(m == 0);
                        CHECK((m > 0) == type_dominates(fiber[i], fiber[j]));
                    }
                }
            }
}

TEST_CASE("cyc on the degree-2 unipotent types") {
    auto z2 = cyc(sigma(uni({2})));
    REQUIRE(z2.coeffs().size() == 2);
    CHECK(z2.coeff(ComponentLabel{TypeComponentLabel{uni({2})}}) == 1);
    CHECK(z2.coeff(ComponentLabel{TypeComponentLabel{uni({1, 1})}}) == 1);

    auto z11 = cyc(sigma(uni({1, 1})));
    CHECK(z11.coeffs().size() == 1);
    CHECK(z11.coeff(ComponentLabel{TypeComponentLabel{uni({1, 1})}}) == 1);
}

TEST_CASE("cyc is linear and rejects residual labels") {
    VirtualRep v;
    v.add(RepLabel{KTypeLabel{uni({2})}}, 1);
    v.add(RepLabel{KTypeLabel{uni({1, 1})}}, -1);
    auto z = cyc(v);
    // Z(1,1) cancels between the two terms.
    CHECK(z.coeffs().size() == 1);
    CHECK(z.coeff(ComponentLabel{TypeComponentLabel{uni({2})}}) == 1);

    CHECK(cyc(VirtualRep{}).zero());

    VirtualRep r;
    r.add(RepLabel{ResidualLabel{Partition({2})}}, 1);
    CHECK_THROWS_AS(cyc(r), argument_error);
}

TEST_CASE("r_tau inverts cyc on every small fiber") {
    std::vector<std::vector<BasicType>> alphabets = {
        {BasicType("1", 1)},
        {BasicType("a", 1), BasicType("b", 1)},
        {BasicType("a", 1), BasicType("b", 2)},
        // a nontrivial involution swapping x and y
        {BasicType("x", 1, "y"), BasicType("y", 1, "x")},
    };
    for (const auto& letters : alphabets)
        for (unsigned budget = 1; budget <= 6; ++budget)
            for (const auto& s : supports_on(letters, budget))
                for (const auto& tau : types_with_scs(s)) {
                    auto r = r_tau(tau);
                    CHECK(cyc(r) == type_component(tau));
                }
}

TEST_CASE("r_tau on semisimple types is a single class") {
    // One-row partitions everywhere: tau is minimal in its fiber, so the
    // multiplicity column is the identity there.
    InertialType tau({{BasicType("a", 1), Partition({1, 1, 1})}});
    auto r = r_tau(tau);
    CHECK(r.coeffs().size() == 1);
    CHECK(r.coeff(RepLabel{KTypeLabel{tau}}) == 1);
}

TEST_CASE("rendered sums match the pinned strings") {
    CHECK(render(r_tau(uni({2}))) == "σ(τ[2]) − σ(τ[1,1])");
    CHECK(render(r_tau(uni({2, 1}))) ==
          "σ(τ[2,1]) − 2σ(τ[1,1,1])");
    CHECK(render(r_tau(uni({3}))) ==
          "σ(τ[3]) − σ(τ[2,1]) + σ(τ[1,1,1])");
    CHECK(render(r_tau(uni({1, 1}))) == "σ(τ[1,1])");
    CHECK(render(r_tau(uni({1, 1, 1}))) == "σ(τ[1,1,1])");
}

TEST_CASE("render covers every label kind") {
    CHECK(render(VirtualRep{}) == "0");
    CHECK(render(Cycle{}) == "0");

    CHECK(render(sigma(uni({2, 1}))) == "σ(τ[2,1])");
    CHECK(render(type_component(uni({2}))) == "Z(τ[2])");

    VirtualRep v;
    v.add(RepLabel{ResidualLabel{Partition({2, 1})}}, -1);
    CHECK(render(v) == "−red(σ[2,1])");

    Cycle c;
    c.add(ComponentLabel{SpecialFibreLabel{}}, 3);
    CHECK(render(c) == "3[p]");

    InertialType two({{BasicType("a", 1), Partition({2, 1})},
                      {BasicType("b", 1), Partition({1})}});
    CHECK(render(sigma(two)) == "σ(τ{a:[2,1],b:[1]})");

    // Letter "1" only earns the short form at dimension 1.
    InertialType fat({{BasicType("1", 2), Partition({1})}});
    CHECK(render(sigma(fat)) == "σ(τ{1:[1]})");
}

TEST_CASE("duality shows up in cyc through the fiber of the dual") {
    BasicType x("x", 1, "y"), y("y", 1, "x");
    InertialType tau({{x, Partition({2})}, {y, Partition({1})}});
    auto z = cyc(sigma(tau));
    // The components live over scs(dual tau): y carries weight 2 there.
    InertialType top({{x, Partition({1})}, {y, Partition({2})}});
    InertialType low({{x, Partition({1})}, {y, Partition({1, 1})}});
    CHECK(z.coeff(ComponentLabel{TypeComponentLabel{top}}) == 1);
    CHECK(z.coeff(ComponentLabel{TypeComponentLabel{low}}) == 1);
    CHECK(z.coeffs().size() == 2);
}

} // TEST_SUITE
