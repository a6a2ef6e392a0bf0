#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "ybg/cocycle.hpp"
#include "ybg/io.hpp"

using namespace ybg;

TEST_CASE("multiply") {
    const Solution s = fixtures::ex1();
    // pi(x1 x2) = t_{f2(1)} t_2 = t3 t2; equals pi(x3 x3) by the relation x1x2 = x3^2
    const GroupElement x1x2 = multiply(generator(s, 0), generator(s, 1));
    CHECK(x1x2.vec == fixtures::vec_of({0, 1, 1, 0}));
    const GroupElement x3x3 = multiply(generator(s, 2), generator(s, 2));
    CHECK(x1x2 == x3x3);

    const GroupElement a = fixtures::gen_word(s, {1, 3, -2});
    CHECK(multiply(a, identity_element(4)) == a);
    CHECK(multiply(generator(s, 0), generator_inverse(s, 0)) == identity_element(4));
}

TEST_CASE("invert") {
    const Solution s = fixtures::ex1();
    // pi(x4^{-1}) = -e_{T(4)} = -e_3
    CHECK(generator_inverse(s, 3).vec == fixtures::vec_of({0, 0, -1, 0}));
    CHECK(invert(identity_element(4)) == identity_element(4));

    const GroupElement x1x2 = fixtures::gen_word(s, {1, 2});
    CHECK(invert(x1x2) == multiply(generator_inverse(s, 1), generator_inverse(s, 0)));
}

TEST_CASE("act") {
    const Solution s = fixtures::ex1();
    // x1 acts via f1^{-1}; on e_2 it gives e_{f1^{-1}(2)} = e_4
    CHECK(act(generator(s, 0), fixtures::vec_of({0, 1, 0, 0})) == fixtures::vec_of({0, 0, 0, 1}));

    std::mt19937 rng(3);
    const SolutionAnalysis an = analyze(s);
    for (int i = 0; i < s.n; ++i) {
        const GroupElement theta = frozen_element(s, i, an.class_m);
        for (int t = 0; t < 20; ++t) {
            const Vec w = fixtures::random_vec(s.n, -5, 5, rng);
            CHECK(act(theta, w) == w);
            CHECK(act(invert(theta), w) == w);
        }
    }
    const GroupElement e = identity_element(s.n);
    const Vec w = fixtures::random_vec(s.n, -5, 5, rng);
    CHECK(act(e, w) == w);
}

TEST_CASE("pi and pi_inverse") {
    const Solution s = fixtures::ex1();
    CHECK(pi(generator(s, 1)) == fixtures::vec_of({0, 1, 0, 0}));
    CHECK(pi(identity_element(4)) == fixtures::vec_of({0, 0, 0, 0}));

    const SolutionAnalysis an = analyze(s);
    for (int i = 0; i < s.n; ++i) {
        Vec w = zero_vec(s.n);
        w[static_cast<std::size_t>(i)] = an.class_m;
        CHECK(frozen_element(s, i, an.class_m) ==
              element_from_word(s, word_of_generators(an.frozen[static_cast<std::size_t>(i)])));
        CHECK(pi(frozen_element(s, i, an.class_m)) == w);
    }

    // pi^{-1}(t_i t_j) = x_{f_j^{-1}(i)} x_j as elements
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            if (i == j) continue;
            Vec w = zero_vec(s.n);
            w[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(j)] = 1;
            const int k = s.f[static_cast<std::size_t>(j)].inverse()(i);
            CHECK(pi_inverse(s, w) == multiply(generator(s, k), generator(s, j)));
        }

    // the worked rejected matrix: pi^{-1}(w_1) = x2 x4 x3 x1^-4, acting via f2^{-1}
    const Vec w1 = fixtures::vec_of({-4, 1, 2, 0});
    const GroupElement e = pi_inverse(s, w1);
    CHECK(e == fixtures::gen_word(s, {2, 4, 3, -1, -1, -1, -1}));
    CHECK(e.perm == s.f[1].inverse());
    CHECK(acting_perm(s, w1) == s.f[1].inverse());
    CHECK(pi(e) == w1);

    // t^l for l > 0 unwinds through powers of T
    const Vec t3 = fixtures::vec_of({0, 0, 3, 0});
    CHECK(pi_inverse(s, t3) == fixtures::gen_word(s, {3, 4, 3}));  // T^2(3)=3, T(3)=4
}

TEST_CASE("normal_word") {
    const Solution s = fixtures::ex1();
    SUBCASE("single letters") {
        CHECK(format_word(normal_word(s, fixtures::vec_of({0, 1, 0, 0}))) == "x2");
        CHECK(format_word(normal_word(s, fixtures::vec_of({0, 0, 0, -1}))) == "x3^-1");
    }
    SUBCASE("frozen words") {
        const SolutionAnalysis an = analyze(s);
        for (int i = 0; i < s.n; ++i) {
            Vec w = zero_vec(s.n);
            w[static_cast<std::size_t>(i)] = an.class_m;
            CHECK(normal_word(s, w) == word_of_generators(an.frozen[static_cast<std::size_t>(i)]));
        }
    }
    SUBCASE("evaluation and length") {
        std::mt19937 rng(17);
        for (const Solution& sol :
             {fixtures::ex1(), fixtures::g2(), fixtures::g3(), fixtures::zg2(), fixtures::perm5()}) {
            for (int t = 0; t < 100; ++t) {
                const Vec w = fixtures::random_vec(sol.n, -3, 3, rng);
                const Word word = normal_word(sol, w);
                CHECK(static_cast<long long>(word.size()) == l1_norm(w));
                CHECK(element_from_word(sol, word) == pi_inverse(sol, w));
            }
        }
    }
    SUBCASE("zg2 matches the displayed word x1 x2 x2") {
        const Solution z = fixtures::zg2();
        CHECK(format_word(normal_word(z, fixtures::vec_of({1, 1, 1}))) == "x1 x2 x2");
    }
}

TEST_CASE("element_from_word") {
    const Solution s = fixtures::ex1();
    CHECK(fixtures::gen_word(s, {1, 2}) == fixtures::gen_word(s, {3, 3}));
    CHECK(element_from_word(s, {}) == identity_element(4));
    CHECK(fixtures::gen_word(s, {1, -1}) == identity_element(4));
}

TEST_CASE("relation preservation fixes the composition convention") {
    for (const Solution& s : {fixtures::ex1(), fixtures::g2(), fixtures::g3(), fixtures::zg2(),
                              fixtures::perm5(), fixtures::trivial(3)}) {
        for (const auto& r : to_presentation(s).relations) {
            const GroupElement lhs = multiply(generator(s, r.i), generator(s, r.j));
            const GroupElement rhs = multiply(generator(s, r.k), generator(s, r.l));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("cocycle fuzz") {
    std::mt19937 rng(23);
    for (const Solution& s :
         {fixtures::ex1(), fixtures::g2(), fixtures::g3(), fixtures::zg2(), fixtures::perm5()}) {
        const SolutionAnalysis an = analyze(s);
        for (int t = 0; t < 300; ++t) {
            const GroupElement a = fixtures::random_element(s, 6, rng);
            const GroupElement b = fixtures::random_element(s, 6, rng);
            // pi(ab) = (b^{-1} . pi(a)) pi(b)
            Vec expect = act(invert(b), pi(a));
            for (int i = 0; i < s.n; ++i) expect[static_cast<std::size_t>(i)] += pi(b)[static_cast<std::size_t>(i)];
            CHECK(pi(multiply(a, b)) == expect);

            // bijectivity both ways
            const Vec w = fixtures::random_vec(s.n, -5, 5, rng);
            CHECK(pi(pi_inverse(s, w)) == w);
            CHECK(pi_inverse(s, pi(a)) == a);

            // mod-m action equivalence
            CHECK(acting_perm_mod(s, an.class_m, w) == acting_perm(s, w));
        }

        // pi^{-1}(-m e_i) = invert(pi^{-1}(m e_i)) and pi^{-1}(-e_i) = x_{g_i^{-1}(i)}^{-1}
        for (int i = 0; i < s.n; ++i) {
            Vec wm = zero_vec(s.n), wneg = zero_vec(s.n);
            wm[static_cast<std::size_t>(i)] = an.class_m;
            wneg[static_cast<std::size_t>(i)] = -an.class_m;
            CHECK(pi_inverse(s, wneg) == invert(pi_inverse(s, wm)));

            Vec w1 = zero_vec(s.n);
            w1[static_cast<std::size_t>(i)] = -1;
            CHECK(pi_inverse(s, w1) ==
                  generator_inverse(s, s.g[static_cast<std::size_t>(i)].inverse()(i)));
        }
    }
}
