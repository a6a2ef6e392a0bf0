#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "ybg/base.hpp"
#include "ybg/permutation.hpp"

namespace ybg {

/// Set-theoretic solution (X,S) on X = {0..n-1}, stored through its two
/// permutation tables: S(x_i, x_j) = (x_{g_i(j)}, x_{f_j(i)}).
/// Non-degeneracy is enforced by the Permutation type; involutivity and the
/// braid relation are checked by validate().
struct Solution {
    int n = 0;
    std::vector<Permutation> f;
    std::vector<Permutation> g;

    static Solution create(std::vector<Permutation> f, std::vector<Permutation> g);

    std::pair<int, int> apply_s(int x, int y) const { return {g[x](y), f[y](x)}; }
};

struct ValidationReport {
    struct Issue {
        enum class Kind { Involutivity, Braid };
        Kind kind;
        std::array<int, 3> witness;  // (x,y,-1) for involutivity, (x,y,z) for braid
    };
    std::vector<Issue> issues;
    bool valid() const { return issues.empty(); }
};

ValidationReport validate(const Solution& s);

/// Group presentation with length-2 relation sides: x_i x_j = x_k x_l.
struct Presentation {
    struct Relation {
        int i, j, k, l;
        bool operator==(const Relation&) const = default;
    };
    int n = 0;
    std::vector<Relation> relations;              // the n(n-1)/2 non-trivial ones
    std::vector<std::pair<int, int>> trivial;     // pairs with S(i,j) = (i,j)
};

/// Enumerates each unordered defining relation once, in lexicographic order
/// of its first-seen side. Throws on invalid solutions.
Presentation to_presentation(const Solution& s);

/// Rebuilds the f,g tables from a presentation satisfying the length-2
/// correspondence conditions; the result always passes validate().
Solution from_presentation(const Presentation& p);

struct SolutionAnalysis {
    Permutation T;                        // T(x) = f_x^{-1}(x)
    int class_m = 0;                      // least m with f_x f_T(x) ... f_T^{m-1}(x) = id
    std::vector<std::vector<int>> frozen; // frozen[i] = word T^{m-1}(i) ... T(i) i
    bool decomposable = false;
    std::vector<std::vector<int>> orbits; // orbits of <f_1..f_n, g_1..g_n>, sorted
    bool satisfies_condition_c = false;   // class <= 2
};

SolutionAnalysis analyze(const Solution& s);

/// Orbit-transitivity test; for n <= 6 also runs the literal invariant-subset
/// definition and throws on disagreement.
std::pair<bool, std::vector<std::vector<int>>> decomposability(const Solution& s);

/// Searches all n! relabelings for alpha with S'(alpha x alpha) = (alpha x alpha) S.
std::optional<Permutation> equivalence(const Solution& s1, const Solution& s2);

}  // namespace ybg
