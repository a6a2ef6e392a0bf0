#include <map>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ybg/oracle.hpp"

using namespace ybg;

TEST_CASE("build_table class counts") {
    SUBCASE("ex1, length 2: sixteen words in ten classes") {
        const WordClassTable t = build_table(fixtures::ex1(), 2);
        CHECK(t.class_count[2] == 10);
        CHECK(t.class_count[1] == 4);
    }
    SUBCASE("trivial n=2, length 2: three classes") {
        const WordClassTable t = build_table(fixtures::trivial(2), 2);
        CHECK(t.class_count[2] == 3);
        CHECK(t.class_members({0, 1}).size() == 2);  // {x1x2, x2x1}
    }
    SUBCASE("g2, length 2: three classes") {
        const WordClassTable t = build_table(fixtures::g2(), 2);
        CHECK(t.class_count[2] == 3);
        CHECK(t.class_id({0, 0}) == t.class_id({1, 1}));
        CHECK(t.class_id({0, 1}) != t.class_id({1, 0}));
    }
}

TEST_CASE("oracle_counts equal the nonnegative-vector counts") {
    for (const Solution& s :
         {fixtures::ex1(), fixtures::g2(), fixtures::g3(), fixtures::trivial(3), fixtures::zg2()}) {
        const WordClassTable t = build_table(s, 4);
        const auto counts = oracle_counts(t);
        REQUIRE(counts.size() == 4);
        for (int k = 1; k <= 4; ++k) {
            CHECK(counts[static_cast<std::size_t>(k - 1)] == binomial(s.n + k - 1, k));
        }
    }
}

TEST_CASE("oracle_divides") {
    const Solution s = fixtures::ex1();
    const WordClassTable t = build_table(s, 4);

    // x1 right-divides x4 x1
    CHECK(oracle_divides(t, {0}, {3, 0}, Side::Right));
    // class of x1x2 is {x1x2, x3x3}: prefixes are x1 and x3, so x2 is not a left divisor
    CHECK_FALSE(oracle_divides(t, {1}, {0, 1}, Side::Left));
    CHECK(oracle_divides(t, {0}, {0, 1}, Side::Left));
    CHECK(oracle_divides(t, {2}, {0, 1}, Side::Left));

    SUBCASE("agreement with the cocycle divisibility route") {
        std::mt19937 rng(53);
        for (const Solution& sol : {fixtures::ex1(), fixtures::g2(), fixtures::g3()}) {
            const WordClassTable table = build_table(sol, 4);
            for (int trial = 0; trial < 200; ++trial) {
                std::uniform_int_distribution<int> lu(1, 2), lv(1, 4);
                const auto u = fixtures::random_positive_word(sol.n, lu(rng), rng);
                const auto v = fixtures::random_positive_word(sol.n, lv(rng), rng);
                const GroupElement eu = element_from_word(sol, word_of_generators(u));
                const GroupElement ev = element_from_word(sol, word_of_generators(v));
                for (Side side : {Side::Left, Side::Right})
                    CHECK(oracle_divides(table, u, v, side) == divides(eu, ev, side));
            }
        }
    }
}

TEST_CASE("congruence soundness and completeness") {
    for (const Solution& s : {fixtures::ex1(), fixtures::g2(), fixtures::g3(), fixtures::zg2()}) {
        const WordClassTable t = build_table(s, 4);
        for (int k = 1; k <= 4; ++k) {
            long long count = 1;
            for (int q = 0; q < k; ++q) count *= s.n;
            // same class <=> equal group elements (pi-injectivity on the monoid)
            std::map<Vec, int> by_image;
            for (long long code = 0; code < count; ++code) {
                const auto w = t.decode(code, k);
                const GroupElement e = element_from_word(s, word_of_generators(w));
                const int cls = t.class_of[static_cast<std::size_t>(k)][static_cast<std::size_t>(code)];
                auto [it, fresh] = by_image.emplace(e.vec, cls);
                CHECK(it->second == cls);
            }
            CHECK(static_cast<long long>(by_image.size()) == t.class_count[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("oracle lcm of two atoms matches the complement formula") {
    for (const Solution& s : {fixtures::ex1(), fixtures::g3()}) {
        const WordClassTable t = build_table(s, 3);
        for (int i = 0; i < s.n; ++i)
            for (int j = 0; j < s.n; ++j) {
                if (i == j) continue;
                const auto lcm = oracle_lcm_right(t, {i}, {j});
                REQUIRE(lcm.has_value());
                CHECK(element_from_word(s, word_of_generators(*lcm)) ==
                      multiply(generator(s, complement_atom(s, i, j)), generator(s, i)));
            }
    }
}

TEST_CASE("size cap") { CHECK_THROWS_AS(build_table(fixtures::perm5(), 10), error); }
