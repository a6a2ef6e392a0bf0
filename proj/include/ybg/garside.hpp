#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ybg/cocycle.hpp"
#include "ybg/solution.hpp"

namespace ybg {

enum class Side { Left, Right };

/// x_i \ x_j = f_i^{-1}(j); the atom c with x_i v_R x_j = x_c x_i. Rejects i = j.
int complement_atom(const Solution& s, int i, int j);

/// Monoid membership: pi-image is coordinatewise nonnegative.
bool is_in_monoid(const GroupElement& a);

/// Right: b a^{-1} in monoid. Left: a^{-1} b in monoid.
bool divides(const GroupElement& a, const GroupElement& b, Side side);

/// The Garside element, pi^{-1}(1,...,1); lcm of the atoms on both sides.
GroupElement delta(const Solution& s);
GroupElement delta_power(const Solution& s, int k);

/// The 2^n divisors of Delta, indexed by bitmask over atoms (bit i set iff
/// coordinate i of the pi-image is 1). Join and meet are computed by brute
/// force over the finite poset.
struct DivisorLattice {
    int n = 0;
    std::vector<GroupElement> elements;  // size 2^n
    int full_mask() const { return (1 << n) - 1; }
    const GroupElement& top() const { return elements[static_cast<std::size_t>(full_mask())]; }
    const GroupElement& bottom() const { return elements[0]; }

    int length(int mask) const;
    bool leq(int a, int b) const;  // right-divisibility order
    int join(int a, int b) const;  // v_R
    int meet(int a, int b) const;  // ^_R

    std::vector<int> left_divisor_atoms(int mask) const;   // X_l
    std::vector<int> right_divisor_atoms(int mask) const;  // X_r
};

/// Builds the lattice and verifies every candidate divides Delta on both
/// sides and that |X_l| = |X_r| = length. Requires n <= 16.
DivisorLattice divisor_lattice(const Solution& s);

/// Count of w in {0..k}^n with pi^{-1}(w) dividing Delta^k on both sides.
long long count_divisors_of_delta_power(const Solution& s, int k);

/// Atom with a sign: x_i for sign +1, x_i^{-1} for sign -1.
struct SignedAtom {
    int index;
    int sign;
    bool operator<(const SignedAtom& o) const {
        return index != o.index ? index < o.index : sign < o.sign;
    }
    bool operator==(const SignedAtom&) const = default;
};

GroupElement signed_atom_element(const Solution& s, SignedAtom a);

/// Complements and lcms extended to X u X^-. Pairs inside X and inside X^-
/// are total; mixed pairs are defined only when derived from a defining
/// relation x_i x_j = x_k x_l (as x_i^{-1} x_k = x_j x_l^{-1} etc).
class ExtendedTables {
public:
    explicit ExtendedTables(const Solution& s);

    /// x_i^{-1} \ x_k^{-1} (left complement on negative atoms), i != k.
    int neg_left_complement(int i, int k) const;
    /// x_j^{-1} with-tilde\ x_l^{-1} (right complement on negative atoms), j != l.
    int neg_right_complement(int j, int l) const;

    std::optional<GroupElement> lcm_r(SignedAtom a, SignedAtom b) const;
    std::optional<GroupElement> lcm_l(SignedAtom a, SignedAtom b) const;

    const std::vector<Presentation::Relation>& relations() const { return rels_; }

private:
    const Solution s_;
    std::vector<Presentation::Relation> rels_;
    std::map<std::pair<int, int>, GroupElement> mixed_r_, mixed_l_;
};

ExtendedTables extended_tables(const Solution& s);

}  // namespace ybg
