#include "ybg/cocycle.hpp"

#include <algorithm>

namespace ybg {

GroupElement identity_element(int n) { return {Permutation(n), zero_vec(n)}; }

GroupElement generator(const Solution& s, int i) {
    if (i < 0 || i >= s.n) throw error("generator index out of range");
    return {s.f[static_cast<std::size_t>(i)].inverse(), unit_vec(s.n, i)};
}

GroupElement generator_inverse(const Solution& s, int i) { return invert(generator(s, i)); }

GroupElement frozen_element(const Solution& s, int i, int class_m) {
    Vec w = zero_vec(s.n);
    w[static_cast<std::size_t>(i)] = class_m;
    return pi_inverse(s, w);
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
    const int n = a.perm.size();
    if (b.perm.size() != n) throw error("multiply: size mismatch");
    // pi(ab) = (b^{-1} . pi(a)) pi(b): transport a's coordinates through b's
    // inverse action, then add.
    Vec v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        v[static_cast<std::size_t>(j)] = a.vec[static_cast<std::size_t>(b.perm(j))] + b.vec[static_cast<std::size_t>(j)];
    return {compose(a.perm, b.perm), std::move(v)};
}

GroupElement invert(const GroupElement& a) {
    const Permutation inv = a.perm.inverse();
    Vec v(a.vec.size());
    for (int j = 0; j < a.perm.size(); ++j)
        v[static_cast<std::size_t>(j)] = -a.vec[static_cast<std::size_t>(inv(j))];
    return {std::move(inv), std::move(v)};
}

Vec act(const GroupElement& a, const Vec& w) { return transported(a.perm, w); }

namespace {

// One peeling step: chooses the rightmost letter of a geodesic word for
// pi^{-1}(w) (least positive coordinate first, else least negative) and
// rewrites w to the remaining prefix's image.
struct PeelStep {
    GenLetter letter;
    Vec rest;
};

PeelStep peel_right(const Solution& s, const Vec& w) {
    const int n = s.n;
    for (int j = 0; j < n; ++j) {
        if (w[static_cast<std::size_t>(j)] > 0) {
            Vec u = w;
            --u[static_cast<std::size_t>(j)];
            return {{j, false}, transported(s.f[static_cast<std::size_t>(j)].inverse(), u)};
        }
    }
    for (int j = 0; j < n; ++j) {
        if (w[static_cast<std::size_t>(j)] < 0) {
            const int k = s.g[static_cast<std::size_t>(j)].inverse()(j);  // pi^{-1}(t_j^{-1}) = x_k^{-1}
            Vec u = w;
            ++u[static_cast<std::size_t>(j)];
            return {{k, true}, transported(s.f[static_cast<std::size_t>(k)], u)};
        }
    }
    throw error("peel_right: zero vector");
}

}  // namespace

GroupElement pi_inverse(const Solution& s, const Vec& w) {
    if (static_cast<int>(w.size()) != s.n) throw error("pi_inverse: vector size mismatch");
    // Letters come out rightmost first; the element is rebuilt by
    // right-multiplying in reverse.
    std::vector<GenLetter> rev;
    Vec cur = w;
    while (l1_norm(cur) > 0) {
        PeelStep st = peel_right(s, cur);
        rev.push_back(st.letter);
        cur = std::move(st.rest);
    }
    GroupElement e = identity_element(s.n);
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
        e = multiply(e, it->inverse ? generator_inverse(s, it->index) : generator(s, it->index));
    return e;
}

Permutation acting_perm(const Solution& s, const Vec& w) {
    Permutation p(s.n);
    Vec cur = w;
    while (l1_norm(cur) > 0) {
        PeelStep st = peel_right(s, cur);
        const Permutation& base = s.f[static_cast<std::size_t>(st.letter.index)];
        p = compose(st.letter.inverse ? base : base.inverse(), p);
        cur = std::move(st.rest);
    }
    return p;
}

Permutation acting_perm_mod(const Solution& s, int class_m, const Vec& w) {
    if (class_m <= 0) throw error("acting_perm_mod: class must be positive");
    return acting_perm(s, reduce_mod(w, class_m));
}

GroupElement element_from_word(const Solution& s, const Word& word) {
    GroupElement e = identity_element(s.n);
    for (const GenLetter& l : word)
        e = multiply(e, l.inverse ? generator_inverse(s, l.index) : generator(s, l.index));
    return e;
}

Word word_of_generators(const std::vector<int>& indices) {
    Word w;
    w.reserve(indices.size());
    for (int i : indices) w.push_back({i, false});
    return w;
}

Word normal_word(const Solution& s, const Vec& w) {
    // Leftmost-letter extraction: x_k is a valid first letter iff stripping
    // it leaves a vector of norm ||w||_1 - 1. For e = x_k b with b acting via
    // beta = f_k o perm(e), pi(b) = w - e_{beta^{-1}(k)}; for e = x_k^{-1} b
    // with beta = f_k^{-1} o perm(e), pi(b) = w + e_{beta^{-1}(T(k))}.
    const int n = s.n;
    Word out;
    Vec cur = w;
    Permutation cur_perm = acting_perm(s, cur);
    const long long total = l1_norm(cur);
    for (long long step = 0; step < total; ++step) {
        bool found = false;
        for (int k = 0; k < n && !found; ++k) {
            const Permutation beta = compose(s.f[static_cast<std::size_t>(k)], cur_perm);
            const int pos = beta.inverse()(k);
            if (cur[static_cast<std::size_t>(pos)] > 0) {
                out.push_back({k, false});
                --cur[static_cast<std::size_t>(pos)];
                cur_perm = beta;
                found = true;
            }
        }
        for (int k = 0; k < n && !found; ++k) {
            const Permutation beta = compose(s.f[static_cast<std::size_t>(k)].inverse(), cur_perm);
            const int tk = s.f[static_cast<std::size_t>(k)].inverse()(k);
            const int pos = beta.inverse()(tk);
            if (cur[static_cast<std::size_t>(pos)] < 0) {
                out.push_back({k, true});
                ++cur[static_cast<std::size_t>(pos)];
                cur_perm = beta;
                found = true;
            }
        }
        if (!found) throw error("normal_word: no geodesic letter found");
    }
    return out;
}

}  // namespace ybg
