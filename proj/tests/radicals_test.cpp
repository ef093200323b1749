#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "pclean/radicals.hpp"
#include "support/oracles.hpp"

using namespace pclean;

namespace {

const char* kCatalog[] = {"Z2",    "Z3",    "Z4",     "Z6",     "Z8",      "Z9",     "Z2[i]",  "Z4[i]",
                          "Z3[w]", "Z9[w]", "T2(Z2)", "T2(Z4)", "Tc2(Z4)", "M2(Z2)", "M2(Z4)", "Z4xZ2"};

std::vector<Index> members(const Ideal& i) { return i.members.sorted(); }

}  // namespace

TEST(Ideals, GeneratedExamples) {
    auto z4 = build_ring("Z4");
    EXPECT_EQ(oracle::formatted(*z4, members(ideal_generated(*z4, std::vector<Index>{z4->parse("2")}))),
              (std::set<std::string>{"0", "2"}));

    auto m2 = build_ring("M2(Z2)");
    EXPECT_EQ(ideal_generated(*m2, std::vector<Index>{m2->parse("[0,1;0,0]")}).size(), 16u);

    auto g4 = build_ring("Z4[i]");
    auto i = ideal_generated(*g4, std::vector<Index>{g4->parse("1+i")});
    EXPECT_EQ(i.size(), 8u);
    for (Index x = 0; x < g4->order(); ++x) {
        const auto c = g4->coordinates(x);
        EXPECT_EQ(i.contains(x), (c[0] % 2) == (c[1] % 2)) << g4->format(x);
    }
}

TEST(Ideals, ClosureMatchesNaiveFixpoint) {
    for (const char* spec : {"Z8", "Z4[i]", "T2(Z4)", "M2(Z2)", "Z4xZ2", "Tc2(Z4)", "Z9[w]"}) {
        SCOPED_TRACE(spec);
        auto r = build_ring(spec);
        for (Index x = 0; x < r->order(); x += (r->order() > 64 ? 7 : 1)) {
            std::vector<Index> gens{x};
            ASSERT_EQ(members(ideal_generated(*r, gens)), oracle::ideal(*r, gens)) << r->format(x);
        }
    }
}

TEST(Ideals, NilpotencyIndex) {
    auto z4 = build_ring("Z4");
    EXPECT_EQ(nilpotency_index(*z4, ideal_generated(*z4, std::vector<Index>{2})), 2u);

    auto g4 = build_ring("Z4[i]");
    EXPECT_EQ(nilpotency_index(*g4, ideal_generated(*g4, std::vector<Index>{g4->parse("1+i")})), 4u);
    const Index a = g4->parse("1+i");
    EXPECT_NE(g4->pow(a, 3), g4->zero());
    EXPECT_EQ(g4->pow(a, 4), g4->zero());

    auto m2 = build_ring("M2(Z2)");
    EXPECT_EQ(nilpotency_index(*m2, ideal_generated(*m2, std::vector<Index>{m2->one()})), std::nullopt);

    EXPECT_EQ(nilpotency_index(*z4, ideal_generated(*z4, std::vector<Index>{})), 1u);
}

TEST(Ideals, StronglyNilpotentExamples) {
    auto z4 = build_ring("Z4");
    auto s = is_strongly_nilpotent(*z4, 2);
    EXPECT_TRUE(s.strongly_nilpotent);
    EXPECT_EQ(s.index, 2u);

    auto m2 = build_ring("M2(Z2)");
    const Index e12 = m2->parse("[0,1;0,0]");
    EXPECT_TRUE(m2->nilpotency_exponent(e12).has_value());
    EXPECT_FALSE(is_strongly_nilpotent(*m2, e12).strongly_nilpotent);

    auto z6 = build_ring("Z6");
    EXPECT_FALSE(is_strongly_nilpotent(*z6, 2).strongly_nilpotent);
}

TEST(Radicals, DescentSequenceAgreement) {
    for (const char* spec : kCatalog) {
        auto r = build_ring(spec);
        if (r->order() > 256) continue;
        SCOPED_TRACE(spec);
        oracle::DescentOracle descent(*r);
        for (Index x = 0; x < r->order(); ++x)
            ASSERT_EQ(is_strongly_nilpotent(*r, x).strongly_nilpotent, descent.strongly_nilpotent(x)) << r->format(x);
    }
}

TEST(Radicals, PrimeRadicalExamples) {
    auto z8 = build_ring("Z8");
    EXPECT_EQ(oracle::formatted(*z8, members(prime_radical(*z8))), (std::set<std::string>{"0", "2", "4", "6"}));

    auto g4 = build_ring("Z4[i]");
    auto p = prime_radical(*g4);
    EXPECT_EQ(p.members, ideal_generated(*g4, std::vector<Index>{g4->parse("1+i")}).members);
    EXPECT_EQ(p.size(), 8u);

    auto m2 = build_ring("M2(Z2)");
    EXPECT_EQ(prime_radical(*m2).size(), 1u);
}

TEST(Radicals, JacobsonExamples) {
    auto z4 = build_ring("Z4");
    EXPECT_EQ(oracle::formatted(*z4, members(jacobson_radical(*z4))), (std::set<std::string>{"0", "2"}));
    auto z6 = build_ring("Z6");
    EXPECT_EQ(jacobson_radical(*z6).size(), 1u);
    auto t2 = build_ring("T2(Z2)");
    EXPECT_EQ(oracle::formatted(*t2, members(jacobson_radical(*t2))),
              (std::set<std::string>{"[0,0;0,0]", "[0,1;0,0]"}));
}

TEST(Radicals, CatalogInvariants) {
    for (const char* spec : kCatalog) {
        SCOPED_TRACE(spec);
        auto r = build_ring(spec);
        auto p = prime_radical(*r);
        auto j = jacobson_radical(*r);
        EXPECT_TRUE(is_ideal(*r, p.members));
        EXPECT_TRUE(is_ideal(*r, j.members));
        EXPECT_TRUE(p.members.is_subset_of(j.members));
        EXPECT_EQ(is_locally_nilpotent(*r, j), nilpotency_index(*r, j).has_value());
        EXPECT_TRUE(is_locally_nilpotent(*r, p));
        if (r->order() <= 256) EXPECT_EQ(members(j), oracle::jacobson(*r));
    }
}

TEST(Radicals, MatrixRadicalIsEntrywise) {
    for (const char* base_spec : {"Z2", "Z4", "Z8"}) {
        SCOPED_TRACE(base_spec);
        auto base = build_ring(base_spec);
        auto m2 = build_ring(std::string("M2(") + base_spec + ")");
        auto pb = prime_radical(*base);
        auto pm = prime_radical(*m2);
        for (Index x = 0; x < m2->order(); ++x) {
            bool entrywise = true;
            for (Index e : m2->matrix_entries(x)) entrywise = entrywise && pb.contains(e);
            ASSERT_EQ(pm.contains(x), entrywise) << m2->format(x);
        }
    }
}

TEST(Predicates, Examples) {
    EXPECT_TRUE(is_boolean(*build_ring("Z2")));
    EXPECT_FALSE(is_boolean(*build_ring("Z4")));
    EXPECT_TRUE(is_boolean(*build_ring("Z2xZ2")));
    EXPECT_FALSE(is_local(*build_ring("Z6")));
    EXPECT_TRUE(is_local(*build_ring("Z4[i]")));
    EXPECT_TRUE(is_local(*build_ring("Z9[w]")));
    EXPECT_FALSE(is_local(*build_ring("M2(Z2)")));
    EXPECT_FALSE(is_abelian(*build_ring("T2(Z2)")));
    EXPECT_TRUE(is_abelian(*build_ring("Z4xZ2")));
}

TEST(Predicates, LocalMatchesUniqueMaximalRightIdeal) {
    // Finite ring is local iff the non-units are closed under addition.
    for (const char* spec : kCatalog) {
        auto r = build_ring(spec);
        if (r->order() > 256) continue;
        SCOPED_TRACE(spec);
        bool closed = true;
        const auto us = oracle::units(*r);
        std::vector<bool> unit(r->order(), false);
        for (Index u : us) unit[u] = true;
        for (Index x = 0; x < r->order() && closed; ++x)
            for (Index y = 0; y < r->order() && closed; ++y)
                if (!unit[x] && !unit[y] && unit[r->add(x, y)]) closed = false;
        EXPECT_EQ(is_local(*r), closed);
    }
}
