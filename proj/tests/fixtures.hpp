#pragma once

#include <random>
#include <vector>

#include "ybg/automorphisms.hpp"
#include "ybg/cocycle.hpp"
#include "ybg/int_matrix.hpp"
#include "ybg/solution.hpp"

namespace fixtures {

using namespace ybg;

// n=4, class 2: g1=(2 3), g2=(1 4), g3=(1 2 4 3), g4=(1 3 4 2);
// f1=(2 4), f2=(1 3), f3=(1 4 3 2), f4=(1 2 3 4)
inline Solution ex1() {
    return Solution::create(
        {Permutation::from_cycles(4, {{2, 4}}), Permutation::from_cycles(4, {{1, 3}}),
         Permutation::from_cycles(4, {{1, 4, 3, 2}}), Permutation::from_cycles(4, {{1, 2, 3, 4}})},
        {Permutation::from_cycles(4, {{2, 3}}), Permutation::from_cycles(4, {{1, 4}}),
         Permutation::from_cycles(4, {{1, 2, 4, 3}}), Permutation::from_cycles(4, {{1, 3, 4, 2}})});
}

// <x1,x2 | x1^2 = x2^2>: f_i = g_i = (1 2)
inline Solution g2() {
    const Permutation t = Permutation::from_cycles(2, {{1, 2}});
    return Solution::create({t, t}, {t, t});
}

// indecomposable on 3 points, class 3: f_i = (1 2 3), g_i = (1 3 2)
inline Solution g3() {
    const Permutation c = Permutation::from_cycles(3, {{1, 2, 3}});
    return Solution::create({c, c, c}, {c.inverse(), c.inverse(), c.inverse()});
}

// decomposable, Z x| G_2: f_i = g_i = (2 3)
inline Solution zg2() {
    const Permutation t = Permutation::from_cycles(3, {{2, 3}});
    return Solution::create({t, t, t}, {t, t, t});
}

// permutation solution on 5 points: f = (1 2 3 4 5), g = f^-1
inline Solution perm5() {
    const Permutation c = Permutation::from_cycles(5, {{1, 2, 3, 4, 5}});
    return Solution::create({c, c, c, c, c},
                            {c.inverse(), c.inverse(), c.inverse(), c.inverse(), c.inverse()});
}

inline Solution trivial(int n) {
    return Solution::create(std::vector<Permutation>(static_cast<std::size_t>(n), Permutation(n)),
                            std::vector<Permutation>(static_cast<std::size_t>(n), Permutation(n)));
}

// rejected candidate for ex1: unimodular but not in Im_pi
inline IntMatrix reject4() {
    return IntMatrix::from_rows({{-4, -3, -4, 0}, {1, 1, 2, 0}, {2, 1, 1, 0}, {0, 0, 0, -1}});
}

// accepted candidate for zg2 with phi(x1) = x1 x2 x2
inline IntMatrix zg2_sigma() { return IntMatrix::from_rows({{1, 2, 2}, {1, 3, 2}, {1, 2, 3}}); }

inline IntMatrix neg_identity(int n) {
    IntMatrix m = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = -1;
    return m;
}

inline Vec vec_of(std::initializer_list<long long> entries) { return Vec(entries); }

inline GroupElement gen_word(const Solution& s, std::initializer_list<int> letters) {
    // positive letters as 1-based indices, negative for inverses
    Word w;
    for (int v : letters) w.push_back({(v > 0 ? v : -v) - 1, v < 0});
    return element_from_word(s, w);
}

// random unimodular matrix as a short product of elementary operations
inline IntMatrix random_unimodular(int n, std::mt19937& rng) {
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<int> row(0, n - 1), coeff(-2, 2), op(0, 3), reps(6, 14);
    const int k = reps(rng);
    for (int t = 0; t < k; ++t) {
        const int r1 = row(rng);
        int r2 = row(rng);
        while (r2 == r1) r2 = row(rng);
        switch (op(rng)) {
            case 0: {  // row add
                const int c = coeff(rng);
                bool safe = true;
                for (int j = 0; j < n; ++j)
                    if (std::abs(m.at(r1, j) + static_cast<long long>(c) * m.at(r2, j)) > 60) safe = false;
                if (!safe) break;
                for (int j = 0; j < n; ++j) m.at(r1, j) += static_cast<long long>(c) * m.at(r2, j);
                break;
            }
            case 1: {  // column add
                const int c = coeff(rng);
                bool safe = true;
                for (int i = 0; i < n; ++i)
                    if (std::abs(m.at(i, r1) + static_cast<long long>(c) * m.at(i, r2)) > 60) safe = false;
                if (!safe) break;
                for (int i = 0; i < n; ++i) m.at(i, r1) += static_cast<long long>(c) * m.at(i, r2);
                break;
            }
            case 2:  // row swap
                for (int j = 0; j < n; ++j) std::swap(m.at(r1, j), m.at(r2, j));
                break;
            default:  // row negate
                for (int j = 0; j < n; ++j) m.at(r1, j) = -m.at(r1, j);
                break;
        }
    }
    return m;
}

inline std::vector<int> random_positive_word(int n, int len, std::mt19937& rng) {
    std::uniform_int_distribution<int> gen(0, n - 1);
    std::vector<int> w(static_cast<std::size_t>(len));
    for (auto& x : w) x = gen(rng);
    return w;
}

inline GroupElement random_element(const Solution& s, int max_len, std::mt19937& rng) {
    std::uniform_int_distribution<int> len(0, max_len), gen(0, s.n - 1), inv(0, 1);
    Word w;
    const int k = len(rng);
    for (int t = 0; t < k; ++t) w.push_back({gen(rng), inv(rng) == 1});
    return element_from_word(s, w);
}

inline Vec random_vec(int n, long long lo, long long hi, std::mt19937& rng) {
    std::uniform_int_distribution<long long> d(lo, hi);
    Vec v(static_cast<std::size_t>(n));
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace fixtures
