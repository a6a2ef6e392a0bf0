#include "ybg/solution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace ybg {

Solution Solution::create(std::vector<Permutation> f, std::vector<Permutation> g) {
    const int n = static_cast<int>(f.size());
    if (static_cast<int>(g.size()) != n) throw error("solution: f and g table sizes differ");
    for (const auto& p : f)
        if (p.size() != n) throw error("solution: f row size mismatch");
    for (const auto& p : g)
        if (p.size() != n) throw error("solution: g row size mismatch");
    Solution s;
    s.n = n;
    s.f = std::move(f);
    s.g = std::move(g);
    return s;
}

ValidationReport validate(const Solution& s) {
    ValidationReport rep;
    using Kind = ValidationReport::Issue::Kind;
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y) {
            auto [a, b] = s.apply_s(x, y);
            if (s.apply_s(a, b) != std::make_pair(x, y))
                rep.issues.push_back({Kind::Involutivity, {x, y, -1}});
        }
    // S^12 S^23 S^12 = S^23 S^12 S^23 on X^3
    auto s12 = [&](std::array<int, 3> t) {
        auto [a, b] = s.apply_s(t[0], t[1]);
        return std::array<int, 3>{a, b, t[2]};
    };
    auto s23 = [&](std::array<int, 3> t) {
        auto [a, b] = s.apply_s(t[1], t[2]);
        return std::array<int, 3>{t[0], a, b};
    };
    for (int x = 0; x < s.n; ++x)
        for (int y = 0; y < s.n; ++y)
            for (int z = 0; z < s.n; ++z) {
                const std::array<int, 3> t{x, y, z};
                if (s12(s23(s12(t))) != s23(s12(s23(t))))
                    rep.issues.push_back({Kind::Braid, {x, y, z}});
            }
    return rep;
}

Presentation to_presentation(const Solution& s) {
    if (!validate(s).valid()) throw error("to_presentation: invalid solution");
    Presentation p;
    p.n = s.n;
    std::set<std::pair<int, int>> emitted;
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.n; ++j) {
            auto [k, l] = s.apply_s(i, j);
            if (k == i && l == j) {
                p.trivial.emplace_back(i, j);
                continue;
            }
            if (emitted.count({i, j})) continue;
            p.relations.push_back({i, j, k, l});
            emitted.insert({i, j});
            emitted.insert({k, l});
        }
    return p;
}

Solution from_presentation(const Presentation& p) {
    const int n = p.n;
    if (n <= 0) throw error("from_presentation: missing size");
    const long long expected = static_cast<long long>(n) * (n - 1) / 2;
    if (static_cast<long long>(p.relations.size()) != expected)
        throw error("from_presentation: expected " + std::to_string(expected) + " relations, got " +
                    std::to_string(p.relations.size()));

    // S is total on X x X: each pair appears on exactly one relation side or
    // as a trivial pair; unseen pairs are implied trivial.
    std::map<std::pair<int, int>, std::pair<int, int>> table;
    auto put = [&](std::pair<int, int> from, std::pair<int, int> to) {
        auto check = [&](int v) {
            if (v < 0 || v >= n) throw error("from_presentation: generator index out of range");
        };
        check(from.first);
        check(from.second);
        check(to.first);
        check(to.second);
        if (table.count(from)) throw error("from_presentation: word x" + std::to_string(from.first + 1) + " x" +
                                           std::to_string(from.second + 1) + " appears more than once");
        table[from] = to;
    };
    for (const auto& r : p.relations) {
        if (std::make_pair(r.i, r.j) == std::make_pair(r.k, r.l))
            throw error("from_presentation: relation with equal sides");
        put({r.i, r.j}, {r.k, r.l});
        put({r.k, r.l}, {r.i, r.j});
    }
    for (const auto& t : p.trivial) put(t, t);

    std::vector<std::vector<int>> f_img(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    std::vector<std::vector<int>> g_img(f_img);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = table.find({i, j});
            const std::pair<int, int> to = it == table.end() ? std::make_pair(i, j) : it->second;
            g_img[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = to.first;
            f_img[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = to.second;
        }

    std::vector<Permutation> f, g;
    f.reserve(static_cast<std::size_t>(n));
    g.reserve(static_cast<std::size_t>(n));
    try {
        for (int i = 0; i < n; ++i) f.push_back(Permutation::from_images(f_img[static_cast<std::size_t>(i)]));
        for (int i = 0; i < n; ++i) g.push_back(Permutation::from_images(g_img[static_cast<std::size_t>(i)]));
    } catch (const error&) {
        throw error("from_presentation: reconstructed tables are not bijective");
    }
    Solution s = Solution::create(std::move(f), std::move(g));
    if (!validate(s).valid()) throw error("from_presentation: reconstructed solution fails the axioms");
    return s;
}

namespace {

std::vector<std::vector<int>> group_orbits(int n, const std::vector<const Permutation*>& gens) {
    std::vector<int> owner(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> orbits;
    for (int i = 0; i < n; ++i) {
        if (owner[static_cast<std::size_t>(i)] >= 0) continue;
        std::vector<int> orbit{i};
        owner[static_cast<std::size_t>(i)] = static_cast<int>(orbits.size());
        for (std::size_t q = 0; q < orbit.size(); ++q)
            for (const Permutation* p : gens) {
                const int img = (*p)(orbit[q]);
                if (owner[static_cast<std::size_t>(img)] < 0) {
                    owner[static_cast<std::size_t>(img)] = static_cast<int>(orbits.size());
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

// Literal definition: a bipartition into two invariant subsets whose
// restrictions are non-degenerate symmetric sub-solutions.
bool decomposable_by_definition(const Solution& s) {
    const int n = s.n;
    auto invariant = [&](unsigned mask) {
        for (int x = 0; x < n; ++x) {
            if (!(mask >> x & 1u)) continue;
            for (int y = 0; y < n; ++y) {
                if (!(mask >> y & 1u)) continue;
                auto [a, b] = s.apply_s(x, y);
                if (!(mask >> a & 1u) || !(mask >> b & 1u)) return false;
            }
        }
        return true;
    };
    // Restrictions of bijections to an invariant subset are bijections of it,
    // and the axioms restrict pointwise, so invariance is the whole test.
    const unsigned full = (1u << n) - 1u;
    for (unsigned mask = 1; mask < full; ++mask)
        if (invariant(mask) && invariant(full & ~mask)) return true;
    return false;
}

}  // namespace

std::pair<bool, std::vector<std::vector<int>>> decomposability(const Solution& s) {
    std::vector<const Permutation*> gens;
    for (const auto& p : s.f) gens.push_back(&p);
    for (const auto& p : s.g) gens.push_back(&p);
    auto orbits = group_orbits(s.n, gens);
    const bool decomposable = orbits.size() > 1;
    if (s.n <= 6 && s.n >= 2) {
        if (decomposable_by_definition(s) != decomposable)
            throw error("decomposability: orbit test disagrees with the literal definition");
    }
    return {decomposable, std::move(orbits)};
}

SolutionAnalysis analyze(const Solution& s) {
    if (!validate(s).valid()) throw error("analyze: invalid solution");
    SolutionAnalysis a;

    std::vector<int> t_img(static_cast<std::size_t>(s.n));
    for (int x = 0; x < s.n; ++x) t_img[static_cast<std::size_t>(x)] = s.f[static_cast<std::size_t>(x)].inverse()(x);
    a.T = Permutation::from_images(std::move(t_img));

    long long cap = 2LL * std::max(1, s.n);
    long long ord = 1;
    for (const auto& p : s.f) ord = std::lcm(ord, p.order());
    cap *= ord;

    // chain[x] = f_x o f_T(x) o ... o f_{T^{m-1}(x)}, extended on the right.
    std::vector<Permutation> chain(static_cast<std::size_t>(s.n), Permutation(s.n));
    std::vector<int> tpow(static_cast<std::size_t>(s.n));
    std::iota(tpow.begin(), tpow.end(), 0);
    int m = 0;
    for (long long step = 1; step <= cap; ++step) {
        bool all_id = true;
        for (int x = 0; x < s.n; ++x) {
            auto& c = chain[static_cast<std::size_t>(x)];
            c = compose(c, s.f[static_cast<std::size_t>(tpow[static_cast<std::size_t>(x)])]);
            tpow[static_cast<std::size_t>(x)] = a.T(tpow[static_cast<std::size_t>(x)]);
            if (!c.is_identity()) all_id = false;
        }
        if (all_id) {
            m = static_cast<int>(step);
            break;
        }
    }
    if (m == 0) throw error("analyze: class search exceeded its cap");
    a.class_m = m;
    a.satisfies_condition_c = m <= 2;

    a.frozen.resize(static_cast<std::size_t>(s.n));
    for (int i = 0; i < s.n; ++i) {
        std::vector<int> word(static_cast<std::size_t>(m));
        int cur = i;
        for (int k = m - 1; k >= 0; --k) {
            word[static_cast<std::size_t>(k)] = cur;
            cur = a.T(cur);
        }
        a.frozen[static_cast<std::size_t>(i)] = std::move(word);
    }

    auto [dec, orbits] = decomposability(s);
    a.decomposable = dec;
    a.orbits = std::move(orbits);
    return a;
}

std::optional<Permutation> equivalence(const Solution& s1, const Solution& s2) {
    if (s1.n != s2.n) return std::nullopt;
    if (!validate(s1).valid() || !validate(s2).valid()) throw error("equivalence: invalid solution");
    std::vector<int> alpha(static_cast<std::size_t>(s1.n));
    std::iota(alpha.begin(), alpha.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < s1.n && ok; ++x)
            for (int y = 0; y < s1.n && ok; ++y) {
                auto [a, b] = s1.apply_s(x, y);
                auto [c, d] = s2.apply_s(alpha[static_cast<std::size_t>(x)], alpha[static_cast<std::size_t>(y)]);
                ok = c == alpha[static_cast<std::size_t>(a)] && d == alpha[static_cast<std::size_t>(b)];
            }
        if (ok) return Permutation::from_images(alpha);
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return std::nullopt;
}

}  // namespace ybg
