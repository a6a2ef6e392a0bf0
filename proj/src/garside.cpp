#include "ybg/garside.hpp"

#include <algorithm>
#include <bit>

namespace ybg {

int complement_atom(const Solution& s, int i, int j) {
    if (i == j) throw error("complement_atom: arguments must differ");
    if (i < 0 || i >= s.n || j < 0 || j >= s.n) throw error("complement_atom: index out of range");
    return s.f[static_cast<std::size_t>(i)].inverse()(j);
}

bool is_in_monoid(const GroupElement& a) {
    return std::all_of(a.vec.begin(), a.vec.end(), [](long long v) { return v >= 0; });
}

bool divides(const GroupElement& a, const GroupElement& b, Side side) {
    if (side == Side::Right) return is_in_monoid(multiply(b, invert(a)));
    return is_in_monoid(multiply(invert(a), b));
}

GroupElement delta(const Solution& s) { return pi_inverse(s, Vec(static_cast<std::size_t>(s.n), 1)); }

GroupElement delta_power(const Solution& s, int k) {
    return pi_inverse(s, Vec(static_cast<std::size_t>(s.n), k));
}

int DivisorLattice::length(int mask) const { return std::popcount(static_cast<unsigned>(mask)); }

bool DivisorLattice::leq(int a, int b) const {
    return divides(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)], Side::Right);
}

int DivisorLattice::join(int a, int b) const {
    // Least common upper bound in the right-divisibility order, by scanning
    // the finite poset.
    std::vector<int> ub;
    for (int c = 0; c <= full_mask(); ++c)
        if (leq(a, c) && leq(b, c)) ub.push_back(c);
    for (int c : ub) {
        bool least = true;
        for (int d : ub)
            if (!leq(c, d)) {
                least = false;
                break;
            }
        if (least) return c;
    }
    throw error("divisor lattice: join does not exist");
}

int DivisorLattice::meet(int a, int b) const {
    std::vector<int> lb;
    for (int c = 0; c <= full_mask(); ++c)
        if (leq(c, a) && leq(c, b)) lb.push_back(c);
    for (int c : lb) {
        bool greatest = true;
        for (int d : lb)
            if (!leq(d, c)) {
                greatest = false;
                break;
            }
        if (greatest) return c;
    }
    throw error("divisor lattice: meet does not exist");
}

std::vector<int> DivisorLattice::left_divisor_atoms(int mask) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        GroupElement atom = elements[static_cast<std::size_t>(1 << i)];
        if (divides(atom, elements[static_cast<std::size_t>(mask)], Side::Left)) out.push_back(i);
    }
    return out;
}

std::vector<int> DivisorLattice::right_divisor_atoms(int mask) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        GroupElement atom = elements[static_cast<std::size_t>(1 << i)];
        if (divides(atom, elements[static_cast<std::size_t>(mask)], Side::Right)) out.push_back(i);
    }
    return out;
}

DivisorLattice divisor_lattice(const Solution& s) {
    if (s.n > 16) throw error("divisor_lattice: n too large");
    DivisorLattice lat;
    lat.n = s.n;
    lat.elements.reserve(1u << s.n);
    for (int mask = 0; mask <= (1 << s.n) - 1; ++mask) {
        Vec w = zero_vec(s.n);
        for (int i = 0; i < s.n; ++i)
            if (mask >> i & 1) w[static_cast<std::size_t>(i)] = 1;
        lat.elements.push_back(pi_inverse(s, w));
    }
    const GroupElement& top = lat.top();
    for (int mask = 0; mask <= lat.full_mask(); ++mask) {
        const GroupElement& e = lat.elements[static_cast<std::size_t>(mask)];
        if (!divides(e, top, Side::Right) || !divides(e, top, Side::Left))
            throw error("divisor_lattice: candidate does not divide Delta on both sides");
        const int len = lat.length(mask);
        if (static_cast<int>(lat.left_divisor_atoms(mask).size()) != len ||
            static_cast<int>(lat.right_divisor_atoms(mask).size()) != len)
            throw error("divisor_lattice: |X_l| or |X_r| differs from the length");
    }
    return lat;
}

long long count_divisors_of_delta_power(const Solution& s, int k) {
    const GroupElement dk = delta_power(s, k);
    long long count = 0;
    Vec w = zero_vec(s.n);
    // odometer over {0..k}^n
    while (true) {
        GroupElement e = pi_inverse(s, w);
        if (divides(e, dk, Side::Right) && divides(e, dk, Side::Left)) ++count;
        int pos = 0;
        while (pos < s.n && w[static_cast<std::size_t>(pos)] == k) {
            w[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == s.n) break;
        ++w[static_cast<std::size_t>(pos)];
    }
    return count;
}

GroupElement signed_atom_element(const Solution& s, SignedAtom a) {
    return a.sign > 0 ? generator(s, a.index) : generator_inverse(s, a.index);
}

ExtendedTables::ExtendedTables(const Solution& s) : s_(s) {
    Presentation p = to_presentation(s);
    rels_ = p.relations;
    for (const auto& r : rels_) {
        // x_i x_j = x_k x_l gives x_i^{-1} x_k = x_j x_l^{-1} and
        // x_k^{-1} x_i = x_l x_j^{-1}; these are the defined mixed lcms.
        const GroupElement ik =
            multiply(generator_inverse(s_, r.i), generator(s_, r.k));  // = x_j x_l^{-1}
        const GroupElement ki =
            multiply(generator_inverse(s_, r.k), generator(s_, r.i));  // = x_l x_j^{-1}
        mixed_l_.insert({{-(r.i + 1), r.j + 1}, ik});   // x_i^{-1} v_L x_j
        mixed_l_.insert({{-(r.k + 1), r.l + 1}, ki});   // x_k^{-1} v_L x_l
        mixed_r_.insert({{-(r.l + 1), r.k + 1}, ik});   // x_l^{-1} v_R x_k
        mixed_r_.insert({{-(r.j + 1), r.i + 1}, ki});   // x_j^{-1} v_R x_i
    }
}

namespace {

// The unique defining relation whose sides start with i and k (i != k):
// x_i x_j = x_k x_l with j = g_i^{-1}(k).
Presentation::Relation relation_with_first_letters(const Solution& s, int i, int k) {
    const int j = s.g[static_cast<std::size_t>(i)].inverse()(k);
    auto [kk, l] = s.apply_s(i, j);
    if (kk != k) throw error("extended tables: inconsistent relation lookup");
    return {i, j, k, l};
}

// The unique defining relation whose sides end with j and l (j != l):
// x_i x_j = x_k x_l with i = f_j^{-1}(l).
Presentation::Relation relation_with_second_letters(const Solution& s, int j, int l) {
    const int i = s.f[static_cast<std::size_t>(j)].inverse()(l);
    auto [k, ll] = s.apply_s(i, j);
    if (ll != l) throw error("extended tables: inconsistent relation lookup");
    return {i, j, k, l};
}

}  // namespace

int ExtendedTables::neg_left_complement(int i, int k) const {
    if (i == k) throw error("neg_left_complement: arguments must differ");
    return relation_with_first_letters(s_, i, k).j;
}

int ExtendedTables::neg_right_complement(int j, int l) const {
    if (j == l) throw error("neg_right_complement: arguments must differ");
    return relation_with_second_letters(s_, j, l).i;
}

std::optional<GroupElement> ExtendedTables::lcm_r(SignedAtom a, SignedAtom b) const {
    if (a.index == b.index && a.sign == b.sign) return std::nullopt;
    if (a.sign > 0 && b.sign > 0) {
        // (x_a \ x_b) x_a
        const int c = complement_atom(s_, a.index, b.index);
        return multiply(generator(s_, c), generator(s_, a.index));
    }
    if (a.sign < 0 && b.sign < 0) {
        // x_i^{-1} v_R x_k^{-1} = x_j^{-1} x_i^{-1} from the relation with
        // first letters (i, k).
        const auto r = relation_with_first_letters(s_, a.index, b.index);
        return multiply(generator_inverse(s_, r.j), generator_inverse(s_, r.i));
    }
    const SignedAtom neg = a.sign < 0 ? a : b;
    const SignedAtom pos = a.sign < 0 ? b : a;
    auto it = mixed_r_.find({-(neg.index + 1), pos.index + 1});
    if (it == mixed_r_.end()) return std::nullopt;
    return it->second;
}

std::optional<GroupElement> ExtendedTables::lcm_l(SignedAtom a, SignedAtom b) const {
    if (a.index == b.index && a.sign == b.sign) return std::nullopt;
    if (a.sign > 0 && b.sign > 0) {
        // x_a v_L x_b = x_a x_c with c = g_a^{-1}(b)
        const int c = s_.g[static_cast<std::size_t>(a.index)].inverse()(b.index);
        return multiply(generator(s_, a.index), generator(s_, c));
    }
    if (a.sign < 0 && b.sign < 0) {
        // x_j^{-1} v_L x_l^{-1} = x_j^{-1} x_i^{-1} from the relation with
        // second letters (j, l).
        const auto r = relation_with_second_letters(s_, a.index, b.index);
        return multiply(generator_inverse(s_, r.j), generator_inverse(s_, r.i));
    }
    const SignedAtom neg = a.sign < 0 ? a : b;
    const SignedAtom pos = a.sign < 0 ? b : a;
    auto it = mixed_l_.find({-(neg.index + 1), pos.index + 1});
    if (it == mixed_l_.end()) return std::nullopt;
    return it->second;
}

ExtendedTables extended_tables(const Solution& s) { return ExtendedTables(s); }

}  // namespace ybg
