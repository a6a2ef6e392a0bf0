#pragma once

#include <vector>

#include "ybg/base.hpp"
#include "ybg/permutation.hpp"
#include "ybg/solution.hpp"

namespace ybg {

/// Element of the structure group through its embedding into Sym(X) x Z^X:
/// `perm` is the permutation through which the element acts on X (f_i^{-1}
/// for the generator x_i) and `vec` is its cocycle image pi(a).
/// perm is redundant (derivable from vec) but makes multiplication O(n).
struct GroupElement {
    Permutation perm;
    Vec vec;
    bool operator==(const GroupElement&) const = default;
};

GroupElement identity_element(int n);
GroupElement generator(const Solution& s, int i);
GroupElement generator_inverse(const Solution& s, int i);
GroupElement frozen_element(const Solution& s, int i, int class_m);

GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);

/// The left action: (result)[a.perm(x)] = w[x].
Vec act(const GroupElement& a, const Vec& w);

inline const Vec& pi(const GroupElement& a) { return a.vec; }

/// Inverse cocycle by peeling: strip one generator (or inverse generator)
/// from the right per step; ||w||_1 decreases by one each time.
GroupElement pi_inverse(const Solution& s, const Vec& w);

/// Acting permutation of pi_inverse(w) without building the element.
Permutation acting_perm(const Solution& s, const Vec& w);

/// Same, after reducing w mod the class m (the action only depends on the
/// residues; coordinates that are 0 mod m contribute nothing).
Permutation acting_perm_mod(const Solution& s, int class_m, const Vec& w);

struct GenLetter {
    int index;     // 0-based generator index
    bool inverse;
    bool operator==(const GenLetter&) const = default;
};
using Word = std::vector<GenLetter>;

/// Geodesic word for pi_inverse(w), built by leftmost-letter extraction
/// (positive letters before negative, least index first at each step).
/// Deterministic; length is exactly ||w||_1.
Word normal_word(const Solution& s, const Vec& w);

GroupElement element_from_word(const Solution& s, const Word& word);

Word word_of_generators(const std::vector<int>& indices);

}  // namespace ybg
